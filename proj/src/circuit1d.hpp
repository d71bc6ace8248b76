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

#ifndef DUQC_CIRCUIT1D_HPP
#define DUQC_CIRCUIT1D_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "oracle.hpp"
#include "solvable.hpp"
#include "types.hpp"

namespace duqc {

// Sites are 1-based throughout; site s is qubit s - 1.
enum class Boundary { Periodic, Open };

// Gate on (bond, bond + 1), wrapping to (2N, 1) on the ring. The gate's
// first tensor factor acts on `bond`.
struct BondGate {
  int bond = 1;
  Gate g = Gate::Identity();
};

struct Circuit1D {
  int num_cells = 1;
  Boundary boundary = Boundary::Periodic;
  std::vector<std::vector<BondGate>> layers;  // layers[tau - 1]

  int num_qubits() const { return 2 * num_cells; }
  int depth() const { return static_cast<int>(layers.size()); }
};

// Bonds of layer tau: (2i, 2i+1) for odd tau, (2i-1, 2i) for even tau.
std::vector<int> layer_bonds(int N, int tau, Boundary boundary);
std::pair<int, int> bond_sites(int N, int bond);

using GateSource = std::function<Gate(int tau, int bond)>;
Circuit1D build_brickwork(int N, int t, const GateSource &source,
                          Boundary boundary = Boundary::Periodic, double tol = kDefaultTol);
Circuit1D random_brickwork(int N, int t, std::uint64_t seed,
                           Boundary boundary = Boundary::Periodic);
void validate(const Circuit1D &c, double tol = kDefaultTol);
Schedule to_schedule(const Circuit1D &c);

struct LocalObservable {
  int start_site = 1;
  std::vector<Mat2> factors;

  int length() const { return static_cast<int>(factors.size()); }
  cplx normalized_trace() const;  // Tr(O) / 2^l
};

// 0-based (qubit, factor) pairs; sites wrap on the ring.
std::vector<std::pair<int, Mat2>> observable_targets(const LocalObservable &obs, int n,
                                                     bool periodic);

enum class Regime { Early, PreCone, Late };
const char *regime_name(Regime r);
Regime classify_regime_1d(long long N, int t, int l, double delta = 0.0);

struct ErrorBudget {
  double lambda1_mod = 0.0;
  long long N = 0;
  int l = 0;
  int t = 0;
  double c_const = 0.0;
  double bound = 0.0;
};

// bound = C (|l1|^(2N-l-2t) + |l1|^N); C defaults to 2 chi^2 when c < 0.
ErrorBudget error_budget(const TransferSpectrum &spec, int chi, long long N, int l, int t,
                         double c = -1.0);

struct FastOptions {
  double delta = 0.0;
  double c_const = -1.0;
  int cone_cap = kConeCap;
  double tol = kDefaultTol;
};

struct FastResult {
  cplx value = 0.0;
  ErrorBudget budget;
  Regime regime = Regime::Early;
  bool exact = false;
};

FastResult expectation_fast(const Circuit1D &c, const SolvableState &init,
                            const LocalObservable &obs, const FastOptions &opt = {});
// Early-regime evaluation without materializing the circuit.
FastResult expectation_fast_analytic(long long N, int t, const LocalObservable &obs,
                                     const SolvableTensor &A, const FastOptions &opt = {});

Statevector evolve_oracle(const Circuit1D &c, const SolvableState &init,
                          int cap = kDefaultOracleCap);
cplx expectation_oracle(const Circuit1D &c, const SolvableState &init,
                        const LocalObservable &obs, int cap = kDefaultOracleCap);

// Initial-state description of a chain for the cone engine. `live` holds
// 0-based chain sites; qubit_of maps a chain site to the global qubit.
ConeInit chain_cone_init(const SolvableState &s, const std::vector<int> &live,
                         const std::function<int(int)> &qubit_of);
std::vector<ConeLayer> to_cone_layers(const Circuit1D &c, double tol = kDefaultTol);
// Exact light-cone evaluation; cost is independent of N.
cplx expectation_cone(const Circuit1D &c, const SolvableState &init,
                      const LocalObservable &obs, int cap = kConeCap);

struct FoldedTransfer {
  int t = 0;
  MatX matrix;
  VecX fixed_vec;
  double right_residual = 0.0;
  double left_residual = 0.0;
};

// Space-direction transfer matrix of cell `cell` after t layers.
FoldedTransfer folded_transfer(const Circuit1D &c, const SolvableTensor &A, int t,
                               int cell = 1);

Circuit1D compile_long_range_cz(int N, int a, int b);
Circuit1D compile_parallel_cz(int N, const std::vector<std::pair<int, int>> &pairs);

struct TargetOp {
  enum class Kind { Single, CZ };
  Kind kind = Kind::Single;
  int q = 1;
  int q2 = 2;
  Mat2 u = Mat2::Identity();
};

// Nearest-neighbour circuit on n logical qubits starting from |0...0>.
struct TargetCircuit {
  int n = 1;
  std::vector<TargetOp> ops;
  int readout = 1;
};

// <0| U^dag (I + Z_readout)/2 U |0>.
double simulate_target(const TargetCircuit &target);

struct UniversalEmbedding {
  Circuit1D circuit;
  int readout_site = 1;
  int prologue_layers = 0;
};

UniversalEmbedding compile_universal(const TargetCircuit &target, int N);

// Adjacency of the rows x cols periodic square lattice as a simple graph;
// vertex (r, c) has index r * cols + c.
std::vector<std::vector<int>> torus_adjacency(int rows, int cols);

struct Cluster1D {
  Circuit1D circuit;
  int m = 1;
  std::vector<int> vertex_site;  // vertex -> 1-based site after the circuit
  std::vector<std::vector<int>> adjacency;
};

Cluster1D cluster_circuit_1d(int m);

cplx obc_boundary_expectation(const Circuit1D &c, const SolvableState &init,
                              const LocalObservable &obs, int cap = kConeCap);

}  // namespace duqc

#endif  // DUQC_CIRCUIT1D_HPP
