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

#include "poanet/mechanisms.hpp"

#include <cmath>
#include <sstream>

namespace poanet {

bool MechanismReport::all_gates_pass() const {
  if (!structure_ok) return false;
  for (bool g : gate_pass)
    if (!g) return false;
  return true;
}

int MechanismReport::first_gate_failure() const {
  for (std::size_t j = 0; j < gate_pass.size(); ++j)
    if (!gate_pass[j]) return static_cast<int>(j);
  return -1;
}

BasisFunction basis_set_covering(int n) {
  if (n < 1) throw ValidationError("basis needs n >= 1");
  BasisFunction w;
  w.values.assign(n + 1, 1.0);
  w.values[0] = 0.0;
  return w;
}

BasisFunction basis_power(int n, double d) {
  if (n < 1) throw ValidationError("basis needs n >= 1");
  if (!(d > 0.0)) throw ValidationError("power basis needs exponent d > 0");
  BasisFunction w;
  w.values.resize(n + 1);
  w.values[0] = 0.0;
  for (int j = 1; j <= n; ++j) w.values[j] = std::pow(static_cast<double>(j), d);
  return w;
}

BasisFunction basis_from_values(const std::vector<double>& values) {
  if (values.size() < 2) throw ValidationError("basis needs values for w(0) and w(1)");
  if (values[0] != 0.0) throw ValidationError("basis requires w(0) = 0");
  for (std::size_t j = 1; j < values.size(); ++j) {
    if (!std::isfinite(values[j]) || values[j] <= 0.0) {
      std::ostringstream msg;
      msg << "basis requires w(" << j << ") > 0, got " << values[j];
      throw ValidationError(msg.str());
    }
  }
  return BasisFunction{values};
}

Mechanism marginal_contribution(const BasisFunction& w, const ClassPartition& part) {
  Mechanism f;
  f.per_class.resize(part.num_classes());
  for (int j = 0; j < part.num_classes(); ++j) {
    const int dom = part.observed_count(j);
    if (dom > w.max_multiplicity())
      throw ValidationError("basis not defined up to class observation size");
    auto& v = f.per_class[j];
    v.assign(dom + 2, 0.0);
    for (int l = 1; l <= dom; ++l) v[l] = w(l) - w(l - 1);
  }
  return f;
}

MechanismReport validate_mechanism(const Mechanism& f, const ClassPartition& part,
                                   const BasisFunction& w) {
  (void)w;
  MechanismReport rep;
  const int k = part.num_classes();
  if (f.num_classes() != k) {
    rep.structure_ok = false;
    rep.detail = "mechanism has " + std::to_string(f.num_classes()) +
                 " class vectors, partition has " + std::to_string(k);
    return rep;
  }
  rep.gate_pass.resize(k, true);
  rep.boundary_ok.resize(k, true);
  for (int j = 0; j < k; ++j) {
    const int dom = part.observed_count(j);
    if (static_cast<int>(f.per_class[j].size()) != dom + 2) {
      rep.structure_ok = false;
      rep.detail = "class " + std::to_string(j + 1) + " vector has length " +
                   std::to_string(f.per_class[j].size()) + ", expected " +
                   std::to_string(dom + 2);
      return rep;
    }
    rep.gate_pass[j] = f.per_class[j][1] > 0.0;
    rep.boundary_ok[j] =
        f.per_class[j].front() == 0.0 && f.per_class[j].back() == 0.0;
  }
  return rep;
}

Mechanism scale_mechanism(const Mechanism& f, double alpha) {
  Mechanism out = f;
  for (auto& v : out.per_class)
    for (double& x : v) x *= alpha;
  return out;
}

}  // namespace poanet
