// Copyright 2026 The poanet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POANET_NETWORK_HPP
#define POANET_NETWORK_HPP

#include <string>
#include <vector>

#include "poanet/common.hpp"

namespace poanet {

/// An information network over n agents. obs[i] lists the agents whose
/// actions agent i can see, always including i itself. Agents are 0-based
/// internally; all file formats and reports use 1-based indices.
struct InformationNetwork {
  int n = 0;
  std::vector<std::vector<int>> obs;  // sorted, deduplicated
  // Agents whose own index was missing from the input and silently added.
  std::vector<int> repaired_agents;
};

/// A partition of the agents into classes. For partitions produced by
/// partition_into_classes, classes are ordered by their smallest member and
/// obs_classes[j] lists the classes whose union is the common observation
/// set of class j.
struct ClassPartition {
  int n = 0;
  std::vector<std::vector<int>> classes;      // sorted members, 0-based
  std::vector<int> kappa;                     // kappa[j] == classes[j].size()
  std::vector<std::vector<int>> obs_classes;  // sorted class indices, 0-based

  int num_classes() const { return static_cast<int>(classes.size()); }
  /// Number of agents observed by class j, |N_j| = sum of kappa over O_j.
  int observed_count(int j) const;
};

/// Outcome of checking one of the partition conditions.
struct ConditionCheck {
  bool pass = true;
  std::string witness;  // first violation found, empty when pass
};

/// Per-condition report produced by validate_partition. A failing condition
/// is informational: some downstream models (two-class blind/isolated)
/// deliberately use partitions that fail these checks.
struct PartitionReport {
  ConditionCheck c1;  // every agent in exactly one class
  ConditionCheck c2;  // every class member observes the whole class
  ConditionCheck c3;  // observation sets are unions of whole classes
  bool all_pass() const { return c1.pass && c2.pass && c3.pass; }
};

/// Validates raw observation sets and returns the network. A missing self
/// index is repaired (inserted) and noted in repaired_agents rather than
/// rejected. Out-of-range indices or an empty agent list throw
/// ValidationError naming the offending agent.
InformationNetwork validate_network(const std::vector<std::vector<int>>& obs);

/// Quotient of the network under the similarity relation: i and i' share a
/// class iff they observe the same set and are observed by the same set.
/// Classes are ordered by smallest member; the result satisfies the three
/// partition conditions by construction.
ClassPartition partition_into_classes(const InformationNetwork& net);

/// Checks the three partition conditions independently against a network and
/// reports each with a witness; never throws on condition failures.
PartitionReport validate_partition(const InformationNetwork& net,
                                   const ClassPartition& part);

/// Complete graph: every agent observes everyone.
InformationNetwork complete_network(int n);

/// kappa blind agents (observe only themselves), the rest observe everyone.
InformationNetwork blind_network(int n, int kappa);

/// kappa isolated agents (observe only themselves, observed by nobody else),
/// the rest observe exactly the non-isolated agents.
InformationNetwork isolated_network(int n, int kappa);

}  // namespace poanet

#endif  // POANET_NETWORK_HPP
