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

#include "poanet/index_sets.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace poanet {

namespace {

// Per-class triples in lexicographic (a, x, b) order, optionally restricted
// to the reduced predicate a*x*b = 0 or a+x+b = kappa.
std::vector<std::array<int, 3>> class_triples(int kappa, bool reduced) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= kappa; ++a)
    for (int x = 0; x <= kappa - a; ++x)
      for (int b = 0; b <= kappa - a - x; ++b) {
        if (reduced && a * x * b != 0 && a + x + b != kappa) continue;
        out.push_back({a, x, b});
      }
  return out;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t count_product(const std::vector<int>& kappa, bool reduced) {
  std::uint64_t total = 1;
  for (int k : kappa) {
    if (k < 1) throw ValidationError("class sizes must be >= 1");
    total = mul_sat(total, class_triples(k, reduced).size());
  }
  return total == std::numeric_limits<std::uint64_t>::max() ? total : total - 1;
}

void validate_kappa(const std::vector<int>& kappa) {
  if (kappa.empty()) throw ValidationError("index set needs at least one class");
  for (int k : kappa)
    if (k < 1) throw ValidationError("class sizes must be >= 1");
}

TupleSet enumerate_product(const std::vector<int>& kappa, bool reduced,
                           std::uint64_t cap) {
  validate_kappa(kappa);
  const std::uint64_t total = count_product(kappa, reduced);
  if (total > cap) {
    std::ostringstream msg;
    msg << "index set has " << total << " tuples, above the cap of " << cap;
    throw CapacityError(msg.str(), total, cap);
  }

  const int k = static_cast<int>(kappa.size());
  std::vector<std::vector<std::array<int, 3>>> per_class(k);
  for (int j = 0; j < k; ++j) per_class[j] = class_triples(kappa[j], reduced);

  std::vector<std::int32_t> flat;
  flat.reserve(static_cast<std::size_t>(total) * 3 * k);
  // Odometer with the last class fastest, so flattened tuples come out in
  // lexicographic order. The all-zero tuple is index 0 in every class list
  // and is skipped.
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    bool all_zero = true;
    for (int j = 0; j < k; ++j)
      if (idx[j] != 0) {
        all_zero = false;
        break;
      }
    if (!all_zero) {
      for (int j = 0; j < k; ++j) {
        const auto& tr = per_class[j][idx[j]];
        flat.push_back(tr[0]);
        flat.push_back(tr[1]);
        flat.push_back(tr[2]);
      }
    }
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == per_class[pos].size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return TupleSet(kappa, std::move(flat));
}

}  // namespace

TupleSet::TupleSet(std::vector<int> kappa, std::vector<std::int32_t> flat)
    : kappa_(std::move(kappa)), flat_(std::move(flat)) {
  count_ = flat_.size() / (3 * kappa_.size());
}

IndexTuple TupleSet::at(std::size_t i) const {
  IndexTuple t;
  auto v = view(i);
  t.triples.resize(kappa_.size());
  for (std::size_t j = 0; j < kappa_.size(); ++j)
    t.triples[j] = {v[3 * j], v[3 * j + 1], v[3 * j + 2]};
  return t;
}

std::uint64_t count_I(const std::vector<int>& kappa) {
  validate_kappa(kappa);
  return count_product(kappa, false);
}

std::uint64_t count_IR(const std::vector<int>& kappa) {
  validate_kappa(kappa);
  return count_product(kappa, true);
}

TupleSet enumerate_I(const std::vector<int>& kappa, std::uint64_t cap) {
  return enumerate_product(kappa, false, cap);
}

TupleSet enumerate_I(const ClassPartition& part, std::uint64_t cap) {
  return enumerate_product(part.kappa, false, cap);
}

TupleSet enumerate_IR(const std::vector<int>& kappa, std::uint64_t cap) {
  return enumerate_product(kappa, true, cap);
}

TupleSet enumerate_IR(const ClassPartition& part, std::uint64_t cap) {
  return enumerate_product(part.kappa, true, cap);
}

TupleStats tuple_stats(std::span<const std::int32_t> flat, const ClassPartition& part) {
  const int k = part.num_classes();
  TupleStats st;
  st.a_observed.resize(k, 0);
  for (int j = 0; j < k; ++j) {
    st.a_total += flat[3 * j] + flat[3 * j + 1];
    st.b_total += flat[3 * j + 2] + flat[3 * j + 1];
  }
  for (int j = 0; j < k; ++j)
    for (int l : part.obs_classes[j])
      st.a_observed[j] += flat[3 * l] + flat[3 * l + 1];
  return st;
}

TupleStats tuple_stats(const IndexTuple& t, const ClassPartition& part) {
  if (t.num_classes() != part.num_classes())
    throw ValidationError("tuple class count does not match partition");
  std::vector<std::int32_t> flat;
  flat.reserve(3 * t.triples.size());
  for (const auto& tr : t.triples) {
    flat.push_back(tr[0]);
    flat.push_back(tr[1]);
    flat.push_back(tr[2]);
  }
  return tuple_stats(std::span<const std::int32_t>(flat), part);
}

std::string dump_tuples_csv(const TupleSet& tuples, const ClassPartition& part) {
  const int k = tuples.num_classes();
  std::ostringstream out;
  for (int j = 1; j <= k; ++j)
    out << "a_" << j << ",x_" << j << ",b_" << j << ",";
  out << "A_t,B_t";
  for (int j = 1; j <= k; ++j) out << ",A_t" << j;
  out << "\n";
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto v = tuples.view(i);
    for (int c = 0; c < 3 * k; ++c) out << v[c] << ",";
    auto st = tuple_stats(v, part);
    out << st.a_total << "," << st.b_total;
    for (int j = 0; j < k; ++j) out << "," << st.a_observed[j];
    out << "\n";
  }
  return out.str();
}

}  // namespace poanet
