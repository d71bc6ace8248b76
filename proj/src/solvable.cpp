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

#include "solvable.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace duqc {

namespace {

constexpr double kUniqueGap = 1e-8;
constexpr int kMaxResample = 64;
constexpr int kMaxDensityQubits = 12;

// Walks every configuration of `cells` consecutive cells, handing the bit
// pattern (site 2c -> bit 2c, site 2c+1 -> bit 2c+1) and the ordered product
// of blocks to `leaf`.
void for_each_product(const SolvableTensor &A, int cells,
                      const std::function<void(std::size_t, const MatX &)> &leaf) {
  std::vector<MatX> stack(cells + 1);
  stack[0] = MatX::Identity(A.chi, A.chi);
  std::function<void(int, std::size_t)> rec = [&](int c, std::size_t idx) {
    if (c == cells) {
      leaf(idx, stack[c]);
      return;
    }
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        stack[c + 1].noalias() = stack[c] * A.at(i, j);
        std::size_t next = idx | (std::size_t(i) << (2 * c)) |
                           (std::size_t(j) << (2 * c + 1));
        rec(c + 1, next);
      }
    }
  };
  rec(0, 0);
}

}  // namespace

double TransferSpectrum::lambda0_mod() const {
  return eigenvalues.empty() ? 0.0 : std::abs(eigenvalues[0]);
}

double TransferSpectrum::lambda1_mod() const {
  return eigenvalues.size() < 2 ? 0.0 : std::abs(eigenvalues[1]);
}

SolvableTensor epr_tensor() {
  SolvableTensor A;
  A.chi = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      A.at(i, j) = MatX::Constant(1, 1, i == j ? 1.0 / std::sqrt(2.0) : 0.0);
  return A;
}

bool SolvableState::is_epr() const {
  if (tensor.chi != 1) return false;
  SolvableTensor e = epr_tensor();
  for (int k = 0; k < 4; ++k)
    if (std::abs(tensor.blocks[k](0, 0) - e.blocks[k](0, 0)) > 1e-14) return false;
  return true;
}

SolvableState epr_chain(int N) {
  if (N < 1) throw Error(Status::InvalidArgument, "EPR chain needs N >= 1");
  SolvableState s;
  s.tensor = epr_tensor();
  s.num_cells = N;
  return s;
}

SolvabilityReport check_solvable(const SolvableTensor &A, double tol) {
  SolvabilityReport rep;
  const int chi = A.chi;
  for (const MatX &b : A.blocks) {
    if (b.rows() != chi || b.cols() != chi || !b.allFinite()) {
      rep.residual_row = rep.residual_column = INFINITY;
      return rep;
    }
  }
  const MatX half = 0.5 * MatX::Identity(chi, chi);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      MatX row = MatX::Zero(chi, chi), col = MatX::Zero(chi, chi);
      for (int k = 0; k < 2; ++k) {
        row += A.at(i, k) * A.at(j, k).adjoint();
        col += A.at(k, i).adjoint() * A.at(k, j);
      }
      if (i == j) {
        row -= half;
        col -= half;
      }
      rep.residual_row = std::max(rep.residual_row, row.cwiseAbs().maxCoeff());
      rep.residual_column = std::max(rep.residual_column, col.cwiseAbs().maxCoeff());
    }
  }
  rep.pass = rep.residual_row <= tol && rep.residual_column <= tol;
  return rep;
}

void require_solvable(const SolvableTensor &A, double tol) {
  SolvabilityReport rep = check_solvable(A, tol);
  if (!rep.pass) {
    throw Error(Status::NotSolvable,
                "tensor is not solvable: row residual " +
                    std::to_string(rep.residual_row) + ", column residual " +
                    std::to_string(rep.residual_column));
  }
}

SolvableTensor random_solvable_tensor(int chi, std::uint64_t seed) {
  if (chi < 1) throw Error(Status::InvalidArgument, "chi must be >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    MatX m = haar_unitary(2 * chi, rng);
    SolvableTensor A;
    A.chi = chi;
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        A.at(i, k) = m.block(i * chi, k * chi, chi, chi) / std::sqrt(2.0);
    if (transfer_spectrum(A).unique_max) return A;
  }
  throw Error(Status::Internal, "no solvable tensor with a unique leading eigenvalue");
}

MatX transfer_matrix(const SolvableTensor &A) {
  const int chi = A.chi;
  MatX E = MatX::Zero(chi * chi, chi * chi);
  for (const MatX &b : A.blocks) {
    for (int a1 = 0; a1 < chi; ++a1)
      for (int b1 = 0; b1 < chi; ++b1) {
        cplx c = std::conj(b(a1, b1));
        if (c == cplx(0)) continue;
        E.block(a1 * chi, b1 * chi, chi, chi) += c * b;
      }
  }
  return E;
}

TransferSpectrum transfer_spectrum(const SolvableTensor &A) {
  MatX E = transfer_matrix(A);
  Eigen::ComplexEigenSolver<MatX> es(E);
  if (es.info() != Eigen::Success) {
    throw Error(Status::Internal, "transfer matrix eigen-decomposition failed");
  }
  const int n = static_cast<int>(E.rows());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(es.eigenvalues()(a)) > std::abs(es.eigenvalues()(b));
  });
  TransferSpectrum sp;
  for (int i : order) sp.eigenvalues.push_back(es.eigenvalues()(i));
  sp.max_eigvec = es.eigenvectors().col(order[0]).normalized();
  double l0 = sp.lambda0_mod();
  sp.unique_max = n == 1 || (l0 > 0 && (l0 - sp.lambda1_mod()) / l0 > kUniqueGap);
  return sp;
}

VecX identity_vector(int chi) {
  VecX v = VecX::Zero(chi * chi);
  for (int a = 0; a < chi; ++a) v(a * chi + a) = 1.0 / std::sqrt(double(chi));
  return v;
}

MatX matrix_power(const MatX &m, long long p) {
  MatX result = MatX::Identity(m.rows(), m.cols());
  MatX base = m;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p) base = base * base;
  }
  return result;
}

double state_norm_sq(const SolvableState &s) {
  MatX En = matrix_power(transfer_matrix(s.tensor), s.num_cells);
  const int chi = s.tensor.chi;
  if (s.boundary == BoundaryKind::PeriodicTrace) return En.trace().real();
  return En(s.alpha * chi + s.alpha, s.beta * chi + s.beta).real();
}

std::vector<cplx> to_statevector(const SolvableState &s, int cap) {
  const int n = s.num_qubits();
  if (n > cap) {
    throw Error(Status::CapExceeded, "statevector of " + std::to_string(n) +
                                         " qubits exceeds cap " + std::to_string(cap));
  }
  std::vector<cplx> amp(std::size_t(1) << n);
  const bool periodic = s.boundary == BoundaryKind::PeriodicTrace;
  for_each_product(s.tensor, s.num_cells, [&](std::size_t idx, const MatX &P) {
    amp[idx] = periodic ? P.trace() : P(s.alpha, s.beta);
  });
  return amp;
}

MatX reduced_density_matrix(const SolvableState &s, int first_cell, int num_cells) {
  const int N = s.num_cells;
  const int chi = s.tensor.chi;
  const int K = 2 * num_cells;
  if (num_cells < 1 || num_cells > N) {
    throw Error(Status::InvalidArgument, "segment length out of range");
  }
  if (K > kMaxDensityQubits) {
    throw Error(Status::CapExceeded, "reduced density matrix of " + std::to_string(K) +
                                         " qubits exceeds cap");
  }
  const bool periodic = s.boundary == BoundaryKind::PeriodicTrace;
  if (!periodic && (first_cell < 0 || first_cell + num_cells > N)) {
    throw Error(Status::InvalidArgument, "segment leaves the open chain");
  }
  MatX psi = MatX::Zero(std::size_t(1) << K, chi * chi);
  for_each_product(s.tensor, num_cells, [&](std::size_t idx, const MatX &P) {
    for (int a = 0; a < chi; ++a)
      for (int b = 0; b < chi; ++b) psi(idx, a * chi + b) = P(a, b);
  });
  MatX E = transfer_matrix(s.tensor);
  MatX W(chi * chi, chi * chi);
  if (periodic) {
    MatX rest = matrix_power(E, N - num_cells);
    for (int a = 0; a < chi; ++a)
      for (int b = 0; b < chi; ++b)
        for (int a2 = 0; a2 < chi; ++a2)
          for (int b2 = 0; b2 < chi; ++b2)
            W(a * chi + b, a2 * chi + b2) = rest(b2 * chi + b, a2 * chi + a);
  } else {
    MatX left = matrix_power(E, first_cell);
    MatX right = matrix_power(E, N - first_cell - num_cells);
    for (int a = 0; a < chi; ++a)
      for (int b = 0; b < chi; ++b)
        for (int a2 = 0; a2 < chi; ++a2)
          for (int b2 = 0; b2 < chi; ++b2)
            W(a * chi + b, a2 * chi + b2) =
                left(s.alpha * chi + s.alpha, a2 * chi + a) *
                right(b2 * chi + b, s.beta * chi + s.beta);
  }
  MatX rho = psi * W * psi.adjoint();
  double tr = rho.trace().real();
  if (!(tr > 0)) throw Error(Status::Internal, "segment has zero weight");
  return rho / tr;
}

}  // namespace duqc
