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

#ifndef DUQC_SOLVABLE_HPP
#define DUQC_SOLVABLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "random.hpp"
#include "types.hpp"

namespace duqc {

// MPS tensor of a two-site cell. blocks[2*i + j] holds A^{(i,j)}, where i is
// the first (odd) site of the cell and j the second.
struct SolvableTensor {
  int chi = 1;
  std::array<MatX, 4> blocks;

  const MatX &at(int i, int j) const { return blocks[2 * i + j]; }
  MatX &at(int i, int j) { return blocks[2 * i + j]; }
};

struct SolvabilityReport {
  double residual_row = 0.0;     // sum_k A^{(i,k)} A^{(j,k)}^dag - delta/2
  double residual_column = 0.0;  // sum_i A^{(i,k)}^dag A^{(i,l)} - delta/2
  bool pass = false;
};

struct TransferSpectrum {
  std::vector<cplx> eigenvalues;  // sorted by modulus, descending
  bool unique_max = false;
  VecX max_eigvec;

  double lambda0_mod() const;
  double lambda1_mod() const;  // 0 when E is 1x1
};

enum class BoundaryKind { PeriodicTrace, Fixed };

struct SolvableState {
  SolvableTensor tensor;
  int num_cells = 1;
  BoundaryKind boundary = BoundaryKind::PeriodicTrace;
  int alpha = 0;  // fixed boundary bond indices
  int beta = 0;

  int num_qubits() const { return 2 * num_cells; }
  bool is_epr() const;
};

SolvableTensor epr_tensor();
SolvableState epr_chain(int N);
SolvabilityReport check_solvable(const SolvableTensor &A, double tol = kDefaultTol);
void require_solvable(const SolvableTensor &A, double tol = kDefaultTol);
SolvableTensor random_solvable_tensor(int chi, std::uint64_t seed);

// E = sum_{ij} conj(A^{(i,j)}) (x) A^{(i,j)}; rows are left bonds (a', a).
MatX transfer_matrix(const SolvableTensor &A);
TransferSpectrum transfer_spectrum(const SolvableTensor &A);
// |I> = chi^{-1/2} sum_a |a a>.
VecX identity_vector(int chi);
MatX matrix_power(const MatX &m, long long p);

double state_norm_sq(const SolvableState &s);

// Unnormalized amplitudes; qubit q (site q+1) is bit q.
std::vector<cplx> to_statevector(const SolvableState &s, int cap = 24);

// Normalized reduced density matrix of the cells [first_cell, first_cell +
// num_cells) (0-based, cyclic for the periodic boundary). Local qubit q is
// bit q and corresponds to site 2*first_cell + q + 1.
MatX reduced_density_matrix(const SolvableState &s, int first_cell,
                            int num_cells);

}  // namespace duqc

#endif  // DUQC_SOLVABLE_HPP
