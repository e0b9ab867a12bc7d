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

#ifndef POANET_MECHANISMS_HPP
#define POANET_MECHANISMS_HPP

#include <string>
#include <vector>

#include "poanet/network.hpp"

namespace poanet {

/// Tabulated basis function w(0..n) with w(0) = 0 and w(j) > 0 for j >= 1.
struct BasisFunction {
  std::vector<double> values;  // values[j] = w(j), size n + 1

  int max_multiplicity() const { return static_cast<int>(values.size()) - 1; }
  double operator()(int j) const { return values[j]; }
};

/// Per-class utility generating mechanism. Vector j holds
/// f_j(0), ..., f_j(|N_j|+1) with both boundary entries equal to zero, so LP
/// builders and game evaluation can index f_j(A) and f_j(A+1) directly.
struct Mechanism {
  std::vector<std::vector<double>> per_class;

  int num_classes() const { return static_cast<int>(per_class.size()); }
  double f(int j, int count) const { return per_class[j][count]; }
};

/// Per-class validation of a mechanism against a partition and basis.
struct MechanismReport {
  std::vector<bool> gate_pass;     // f_j(1) > 0, the PoA > 0 gate
  std::vector<bool> boundary_ok;   // f_j(0) == 0 and f_j(|N_j|+1) == 0
  bool structure_ok = true;        // class count and vector lengths match
  std::string detail;

  bool all_gates_pass() const;
  /// 0-based index of the first class with f_j(1) <= 0, or -1.
  int first_gate_failure() const;
};

/// Set covering basis: w(0) = 0, w(j) = 1 for 1 <= j <= n.
BasisFunction basis_set_covering(int n);

/// Power basis w(j) = j^d for d in (0, 1]; submodular welfare for d < 1.
BasisFunction basis_power(int n, double d);

/// Basis from explicit values; enforces w(0) = 0 and positivity above 0.
BasisFunction basis_from_values(const std::vector<double>& values);

/// Marginal contribution mechanism f_j(l) = w(l) - w(l-1) on every class.
Mechanism marginal_contribution(const BasisFunction& w, const ClassPartition& part);

/// Checks gates, boundary zeros, and vector lengths. Length mismatches are a
/// structural error (reflected in the report, not thrown).
MechanismReport validate_mechanism(const Mechanism& f, const ClassPartition& part,
                                   const BasisFunction& w);

/// Scales every class vector by alpha. PoA is invariant for alpha > 0.
Mechanism scale_mechanism(const Mechanism& f, double alpha);

}  // namespace poanet

#endif  // POANET_MECHANISMS_HPP
