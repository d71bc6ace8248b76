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

#include "gates.hpp"

#include <cmath>

namespace duqc {

namespace {

const cplx kI(0.0, 1.0);

void require_unitary2(const Mat2 &m, const char *name, double tol) {
  if (!m.allFinite() || !is_unitary(m, tol)) {
    throw Error(Status::InvalidArgument,
                std::string("single-qubit factor ") + name + " is not unitary");
  }
}

}  // namespace

Mat2 pauli_i() { return Mat2::Identity(); }

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 hadamard() {
  Mat2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Mat2 pauli_rot(const Mat2 &p, double theta) {
  return std::cos(theta) * Mat2::Identity() + kI * std::sin(theta) * p;
}

Gate kron(const Mat2 &a, const Mat2 &b) {
  Gate g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) g(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return g;
}

Gate swap_gate() {
  Gate g = Gate::Zero();
  g(0, 0) = 1;
  g(1, 2) = 1;
  g(2, 1) = 1;
  g(3, 3) = 1;
  return g;
}

Gate cz_gate() { return cz_pow(1.0); }

Gate cz_pow(double alpha) {
  Gate g = Gate::Identity();
  g(3, 3) = std::exp(kI * kPi * alpha);
  return g;
}

MatX expm_herm(const MatX &h, double theta) {
  Eigen::SelfAdjointEigenSolver<MatX> es(h);
  VecX ph(h.rows());
  for (int i = 0; i < h.rows(); ++i) ph(i) = std::exp(-kI * theta * es.eigenvalues()(i));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Gate build_dual_unitary(const DualUnitaryParams &p, double tol) {
  require_unitary2(p.u1, "u1", tol);
  require_unitary2(p.u2, "u2", tol);
  require_unitary2(p.v1, "v1", tol);
  require_unitary2(p.v2, "v2", tol);
  if (!std::isfinite(p.phi) || !std::isfinite(p.alpha)) {
    throw Error(Status::InvalidArgument, "phi and alpha must be finite");
  }
  return std::exp(kI * p.phi) * kron(p.u1, p.u2) * swap_gate() *
         cz_pow(p.alpha) * kron(p.v1, p.v2);
}

Gate xxz_kernel(double J) {
  Gate h = kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) +
           J * kron(pauli_z(), pauli_z());
  return expm_herm(h, kPi / 4);
}

XxzForm to_xxz_form(const DualUnitaryParams &p) {
  XxzForm f;
  f.phi = p.phi + kPi * (p.alpha + 1.0) / 4.0;
  f.J = 1.0 - p.alpha;
  f.u1 = p.u1;
  f.u2 = p.u2;
  Mat2 rz = pauli_rot(pauli_z(), -kPi * p.alpha / 4.0);
  f.v1 = rz * p.v1;
  f.v2 = rz * p.v2;
  return f;
}

Gate build_xxz_form(const XxzForm &f) {
  return std::exp(kI * f.phi) * kron(f.u1, f.u2) * xxz_kernel(f.J) *
         kron(f.v1, f.v2);
}

Gate dual_of(const Gate &g) {
  Gate d;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d(2 * k + l, 2 * i + j) = g(2 * j + l, 2 * i + k);
  return d;
}

double unitarity_residual(const MatX &g) {
  if (g.rows() != g.cols()) return INFINITY;
  MatX r = g.adjoint() * g - MatX::Identity(g.rows(), g.cols());
  return r.cwiseAbs().maxCoeff();
}

bool is_unitary(const MatX &g, double tol) {
  return unitarity_residual(g) <= tol;
}

double dual_unitarity_residual(const Gate &g) {
  return std::max(unitarity_residual(g), unitarity_residual(dual_of(g)));
}

bool is_dual_unitary(const Gate &g, double tol) {
  return dual_unitarity_residual(g) <= tol;
}

Gate named_gate(const NamedGateParams &p) {
  switch (p.family) {
    case GateFamily::XxzKernel:
      return xxz_kernel(p.J);
    case GateFamily::KickedIsing: {
      const double q = kPi / 4;
      Mat2 x = pauli_x(), y = pauli_y(), z = pauli_z();
      Mat2 field = pauli_rot(z, -p.h);
      Gate g = std::exp(-kI * q) *
               kron(field * pauli_rot(x, q), pauli_rot(x, q)) *
               kron(pauli_rot(y, -q), pauli_rot(y, -q)) * xxz_kernel(0.0) *
               kron(pauli_rot(z, q), pauli_rot(z, q)) *
               kron(pauli_rot(y, q) * field, pauli_rot(y, q));
      return g;
    }
  }
  throw Error(Status::InvalidArgument, "unknown gate family");
}

DualUnitaryParams random_dual_params(Rng &rng) {
  DualUnitaryParams p;
  p.phi = uniform(rng, 0.0, 2 * kPi);
  p.alpha = uniform(rng, 0.0, 2.0);
  p.u1 = haar_unitary(2, rng);
  p.u2 = haar_unitary(2, rng);
  p.v1 = haar_unitary(2, rng);
  p.v2 = haar_unitary(2, rng);
  return p;
}

Gate random_dual_unitary(Rng &rng) {
  return build_dual_unitary(random_dual_params(rng));
}

Gate random_dual_unitary(std::uint64_t seed) {
  Rng rng(seed);
  return random_dual_unitary(rng);
}

Gate random_unitary4(Rng &rng) { return haar_unitary(4, rng); }

}  // namespace duqc
