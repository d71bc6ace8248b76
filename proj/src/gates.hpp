// Copyright 2026 The duqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUQC_GATES_HPP
#define DUQC_GATES_HPP

#include <cstdint>

#include "random.hpp"
#include "types.hpp"

namespace duqc {

// Two-qubit gates are 4x4 matrices, row-major over |00>,|01>,|10>,|11> with
// the first tensor factor on the left.

Mat2 pauli_i();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
// exp(i theta P) for a Pauli matrix P.
Mat2 pauli_rot(const Mat2 &p, double theta);

Gate kron(const Mat2 &a, const Mat2 &b);
Gate swap_gate();
Gate cz_gate();
// diag(1, 1, 1, exp(i pi alpha)).
Gate cz_pow(double alpha);
// exp(-i theta h) for Hermitian h.
MatX expm_herm(const MatX &h, double theta);

struct DualUnitaryParams {
  double phi = 0.0;
  double alpha = 0.0;
  Mat2 u1 = Mat2::Identity();
  Mat2 u2 = Mat2::Identity();
  Mat2 v1 = Mat2::Identity();
  Mat2 v2 = Mat2::Identity();
};

Gate build_dual_unitary(const DualUnitaryParams &p, double tol = kDefaultTol);

// The same gate written with the XXZ kernel exp(-i pi/4 (XX + YY + J ZZ)).
struct XxzForm {
  double phi = 0.0;
  double J = 0.0;
  Mat2 u1, u2, v1, v2;
};
XxzForm to_xxz_form(const DualUnitaryParams &p);
Gate xxz_kernel(double J);
Gate build_xxz_form(const XxzForm &f);

// <k|<l| D |i>|j> = <j|<l| U |i>|k>.
Gate dual_of(const Gate &g);

double unitarity_residual(const MatX &g);
bool is_unitary(const MatX &g, double tol = kDefaultTol);
double dual_unitarity_residual(const Gate &g);
bool is_dual_unitary(const Gate &g, double tol = kDefaultTol);

enum class GateFamily { XxzKernel, KickedIsing };

struct NamedGateParams {
  GateFamily family = GateFamily::XxzKernel;
  double J = 0.0;
  double h = 0.0;
};

Gate named_gate(const NamedGateParams &p);

DualUnitaryParams random_dual_params(Rng &rng);
Gate random_dual_unitary(Rng &rng);
Gate random_dual_unitary(std::uint64_t seed);
Gate random_unitary4(Rng &rng);

}  // namespace duqc

#endif  // DUQC_GATES_HPP
