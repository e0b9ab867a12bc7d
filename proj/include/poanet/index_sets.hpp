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

#ifndef POANET_INDEX_SETS_HPP
#define POANET_INDEX_SETS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "poanet/network.hpp"

namespace poanet {

inline constexpr std::uint64_t kDefaultTupleCap = 5'000'000;

/// One index tuple: per class j a triple (a_j, x_j, b_j) counting agents that
/// select a resource only at equilibrium, at both profiles, and only at the
/// optimum, respectively.
struct IndexTuple {
  std::vector<std::array<int, 3>> triples;

  int num_classes() const { return static_cast<int>(triples.size()); }
  int a(int j) const { return triples[j][0]; }
  int x(int j) const { return triples[j][1]; }
  int b(int j) const { return triples[j][2]; }

  bool operator==(const IndexTuple&) const = default;
};

/// Coverage statistics of a tuple: total selectors at equilibrium (A_t), at
/// the optimum (B_t), and the per-class observed equilibrium count (A_tj).
struct TupleStats {
  int a_total = 0;
  int b_total = 0;
  std::vector<int> a_observed;
};

/// A fixed enumeration of index tuples stored as one flat array of
/// 3k integers per tuple, in lexicographic order of the flattened
/// (a_1, x_1, b_1, a_2, ...) vector.
class TupleSet {
 public:
  TupleSet(std::vector<int> kappa, std::vector<std::int32_t> flat);

  std::size_t size() const { return count_; }
  int num_classes() const { return static_cast<int>(kappa_.size()); }
  const std::vector<int>& kappa() const { return kappa_; }

  /// Raw 3k-entry view of tuple i: [a_1, x_1, b_1, a_2, ...].
  std::span<const std::int32_t> view(std::size_t i) const {
    return {flat_.data() + 3 * kappa_.size() * i, 3 * kappa_.size()};
  }
  IndexTuple at(std::size_t i) const;

 private:
  std::vector<int> kappa_;
  std::vector<std::int32_t> flat_;
  std::size_t count_ = 0;
};

/// Number of tuples in I for the given class sizes:
/// prod_j C(kappa_j + 3, 3) - 1. Saturates at UINT64_MAX on overflow.
std::uint64_t count_I(const std::vector<int>& kappa);

/// Number of tuples in the reduced set I_R for the given class sizes.
std::uint64_t count_IR(const std::vector<int>& kappa);

/// All tuples with 0 <= a_j + x_j + b_j <= kappa_j per class and total sum in
/// [1, n]. Throws CapacityError (reporting the exact count) above cap.
TupleSet enumerate_I(const std::vector<int>& kappa,
                     std::uint64_t cap = kDefaultTupleCap);
TupleSet enumerate_I(const ClassPartition& part,
                     std::uint64_t cap = kDefaultTupleCap);

/// The subset of I whose tuples additionally satisfy, per class,
/// a_j * x_j * b_j = 0 or a_j + x_j + b_j = kappa_j.
TupleSet enumerate_IR(const std::vector<int>& kappa,
                      std::uint64_t cap = kDefaultTupleCap);
TupleSet enumerate_IR(const ClassPartition& part,
                      std::uint64_t cap = kDefaultTupleCap);

TupleStats tuple_stats(const IndexTuple& t, const ClassPartition& part);
TupleStats tuple_stats(std::span<const std::int32_t> flat, const ClassPartition& part);

/// Debug dump: CSV with columns a_1,x_1,b_1,...,A_t,B_t,A_t1,...,A_tk.
std::string dump_tuples_csv(const TupleSet& tuples, const ClassPartition& part);

}  // namespace poanet

#endif  // POANET_INDEX_SETS_HPP
