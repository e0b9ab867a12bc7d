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

#include "poanet/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace poanet {

namespace {

std::string agent_str(int i) { return std::to_string(i + 1); }  // 1-based for humans

}  // namespace

int ClassPartition::observed_count(int j) const {
  int total = 0;
  for (int l : obs_classes[j]) total += kappa[l];
  return total;
}

InformationNetwork validate_network(const std::vector<std::vector<int>>& obs) {
  if (obs.empty()) throw ValidationError("network has no agents");
  const int n = static_cast<int>(obs.size());
  InformationNetwork net;
  net.n = n;
  net.obs.resize(n);
  for (int i = 0; i < n; ++i) {
    std::set<int> s;
    for (int a : obs[i]) {
      if (a < 0 || a >= n) {
        std::ostringstream msg;
        msg << "agent " << agent_str(i) << " observes out-of-range agent index "
            << (a + 1) << " (network has " << n << " agents)";
        throw ValidationError(msg.str());
      }
      s.insert(a);
    }
    if (s.insert(i).second) net.repaired_agents.push_back(i);
    net.obs[i].assign(s.begin(), s.end());
  }
  return net;
}

ClassPartition partition_into_classes(const InformationNetwork& net) {
  const int n = net.n;
  // observed_by[i] = { l : i in obs[l] }
  std::vector<std::vector<int>> observed_by(n);
  for (int l = 0; l < n; ++l)
    for (int i : net.obs[l]) observed_by[i].push_back(l);

  // Group agents by (obs, observed_by); map keys give a canonical grouping,
  // then classes are reordered by smallest member.
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> groups;
  for (int i = 0; i < n; ++i)
    groups[{net.obs[i], observed_by[i]}].push_back(i);

  std::vector<std::vector<int>> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) classes.push_back(members);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  ClassPartition part;
  part.n = n;
  part.classes = std::move(classes);
  const int k = part.num_classes();
  part.kappa.resize(k);
  std::vector<int> class_of(n);
  for (int j = 0; j < k; ++j) {
    part.kappa[j] = static_cast<int>(part.classes[j].size());
    for (int i : part.classes[j]) class_of[i] = j;
  }
  // Similar agents are observed as a block, so the observation set of any
  // member is an exact union of classes.
  part.obs_classes.resize(k);
  for (int j = 0; j < k; ++j) {
    std::set<int> seen;
    for (int a : net.obs[part.classes[j].front()]) seen.insert(class_of[a]);
    part.obs_classes[j].assign(seen.begin(), seen.end());
  }
  return part;
}

PartitionReport validate_partition(const InformationNetwork& net,
                                   const ClassPartition& part) {
  PartitionReport rep;
  const int n = net.n;

  // C.1: classes partition the agent set.
  {
    std::vector<int> count(n, 0);
    bool range_ok = true;
    for (std::size_t j = 0; j < part.classes.size() && range_ok; ++j) {
      for (int i : part.classes[j]) {
        if (i < 0 || i >= n) {
          rep.c1 = {false, "class " + std::to_string(j + 1) +
                               " contains out-of-range agent " + std::to_string(i + 1)};
          range_ok = false;
          break;
        }
        ++count[i];
      }
    }
    if (range_ok) {
      for (int i = 0; i < n; ++i) {
        if (count[i] != 1) {
          rep.c1 = {false, "agent " + agent_str(i) + " appears in " +
                               std::to_string(count[i]) + " classes"};
          break;
        }
      }
    }
  }
  if (!rep.c1.pass) return rep;  // C.2/C.3 are meaningless without a partition

  // C.2: every member of a class observes the whole class.
  for (std::size_t j = 0; j < part.classes.size() && rep.c2.pass; ++j) {
    for (int i : part.classes[j]) {
      for (int other : part.classes[j]) {
        if (!std::binary_search(net.obs[i].begin(), net.obs[i].end(), other)) {
          rep.c2 = {false, "agent " + agent_str(i) + " in class " +
                               std::to_string(j + 1) + " does not observe agent " +
                               agent_str(other)};
          break;
        }
      }
      if (!rep.c2.pass) break;
    }
  }

  // C.3: all members of a class share one observation set, and that set is a
  // union of whole classes.
  for (std::size_t j = 0; j < part.classes.size() && rep.c3.pass; ++j) {
    const auto& ref = net.obs[part.classes[j].front()];
    for (int i : part.classes[j]) {
      if (net.obs[i] != ref) {
        rep.c3 = {false, "agents " + agent_str(part.classes[j].front()) + " and " +
                             agent_str(i) + " in class " + std::to_string(j + 1) +
                             " have different observation sets"};
        break;
      }
    }
    if (!rep.c3.pass) break;
    std::set<int> obs_set(ref.begin(), ref.end());
    for (std::size_t l = 0; l < part.classes.size(); ++l) {
      int inside = 0;
      for (int a : part.classes[l])
        if (obs_set.count(a)) ++inside;
      if (inside != 0 && inside != static_cast<int>(part.classes[l].size())) {
        rep.c3 = {false, "class " + std::to_string(j + 1) +
                             " observes only part of class " + std::to_string(l + 1)};
        break;
      }
    }
  }
  return rep;
}

InformationNetwork complete_network(int n) {
  if (n < 1) throw ValidationError("network needs at least one agent");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  InformationNetwork net;
  net.n = n;
  net.obs.assign(n, all);
  return net;
}

InformationNetwork blind_network(int n, int kappa) {
  if (n < 1) throw ValidationError("network needs at least one agent");
  if (kappa < 0 || kappa > n)
    throw ValidationError("blind agent count out of range [0, n]");
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  InformationNetwork net;
  net.n = n;
  net.obs.resize(n);
  for (int i = 0; i < n; ++i)
    net.obs[i] = (i < kappa) ? std::vector<int>{i} : all;
  return net;
}

InformationNetwork isolated_network(int n, int kappa) {
  if (n < 1) throw ValidationError("network needs at least one agent");
  if (kappa < 0 || kappa > n)
    throw ValidationError("isolated agent count out of range [0, n]");
  std::vector<int> rest;
  for (int i = kappa; i < n; ++i) rest.push_back(i);
  InformationNetwork net;
  net.n = n;
  net.obs.resize(n);
  for (int i = 0; i < n; ++i)
    net.obs[i] = (i < kappa) ? std::vector<int>{i} : rest;
  return net;
}

}  // namespace poanet
