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

#ifndef DUQC_ORACLE_HPP
#define DUQC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace duqc {

inline constexpr int kDefaultOracleCap = 24;
inline constexpr int kAssembleCap = 12;

// Gate g on qubits (a, b); a is the first tensor factor.
struct Placement {
  int a = 0;
  int b = 0;
  Gate g = Gate::Identity();
};

struct Layer {
  std::string role;
  std::vector<Placement> gates;
};

using Schedule = std::vector<Layer>;

// Dense state. Qubit q lives at bit site_order[q] of the amplitude index.
class Statevector {
 public:
  Statevector() = default;
  explicit Statevector(int n, int cap = kDefaultOracleCap);
  Statevector(int n, std::vector<cplx> amps, int cap = kDefaultOracleCap);

  int num_qubits() const { return n_; }
  std::size_t size() const { return amp_.size(); }
  const std::vector<cplx> &amplitudes() const { return amp_; }
  std::vector<cplx> &amplitudes() { return amp_; }
  const std::vector<int> &site_order() const { return order_; }
  void set_site_order(std::vector<int> order);
  int bit_of(int q) const { return order_[q]; }
  double norm_sq() const;
  void normalize();

 private:
  int n_ = 0;
  std::vector<cplx> amp_;
  std::vector<int> order_;
};

// Product of EPR pairs (|00> + |11>)/sqrt(2) on the given qubit pairs; all
// other qubits start in |0>.
Statevector epr_product_state(int n, const std::vector<std::pair<int, int>> &pairs,
                              int cap = kDefaultOracleCap);
Statevector kron_states(const Statevector &low, const Statevector &high);

void apply_one_qubit(Statevector &s, const Mat2 &m, int a);
void apply_two_qubit(Statevector &s, const Gate &g, int a, int b);
void apply_layer(Statevector &s, const Layer &layer);
void evolve(Statevector &s, const Schedule &sched);

enum class Pauli { I, X, Y, Z };
using PauliString = std::vector<std::pair<int, Pauli>>;

Mat2 pauli_matrix(Pauli p);
cplx expectation_pauli(const Statevector &s, const PauliString &p);
// <psi| prod_k O_k |psi> / <psi|psi> for single-qubit factors on distinct
// qubits.
cplx expectation_product(const Statevector &s,
                         const std::vector<std::pair<int, Mat2>> &ops);

struct StabilizerReport {
  std::vector<double> values;
  double worst_deviation = 0.0;
  bool pass = false;
};

// adjacency[v] lists the neighbours of vertex v; vertex v sits on qubit
// vertex_qubit[v].
StabilizerReport verify_stabilizers(const Statevector &s,
                                    const std::vector<std::vector<int>> &adjacency,
                                    const std::vector<int> &vertex_qubit,
                                    double tol = kDefaultTol);

MatX assemble_unitary(int n, const Schedule &sched);

std::vector<std::uint64_t> sample_outcomes(const Statevector &s, std::size_t shots,
                                           std::uint64_t seed, double tol = 1e-8);

// Raw little-endian (re, im) doubles plus a JSON sidecar {n, site_order}.
void dump_statevector(const Statevector &s, const std::string &path);

}  // namespace duqc

#endif  // DUQC_ORACLE_HPP
