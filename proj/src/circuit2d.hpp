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

#ifndef DUQC_CIRCUIT2D_HPP
#define DUQC_CIRCUIT2D_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "circuit1d.hpp"

namespace duqc {

inline constexpr int kOracleCap2D = 20;

// Lattice site (j, k), 1-based; j runs along the solvable chains.
struct Site2 {
  int j = 1;
  int k = 1;
  bool operator==(const Site2 &o) const { return j == o.j && k == o.k; }
};

struct Lattice2D {
  int rows = 2;  // 2N, along j
  int cols = 2;  // 2M, along k
  // Disabled k-direction bonds ((j, k), (j, k + 1)), stored as (j, k) with
  // k already wrapped into [1, cols].
  std::set<std::pair<int, int>> masked;

  int num_qubits() const { return rows * cols; }
  // Row-major: (j, k) -> (j - 1) * cols + (k - 1), with periodic wrap.
  int qubit(int j, int k) const;
  int qubit(const Site2 &s) const { return qubit(s.j, s.k); }
  Site2 wrap(const Site2 &s) const;
  bool is_masked(const Site2 &a, const Site2 &b) const;
};

Lattice2D make_lattice(int rows, int cols);
// Brick-wall honeycomb: the k-bond leaving (j, k) is kept iff j + k is even.
void apply_honeycomb_mask(Lattice2D &lat);

enum class Role2D { U1, U2, U3, U4 };
const char *role_name(Role2D r);
bool role_is_dual(Role2D r);

struct PlacedGate2D {
  Site2 from;
  Site2 to;
  Gate g = Gate::Identity();
};

struct Layer2D {
  Role2D role = Role2D::U1;
  std::vector<PlacedGate2D> gates;
};

struct Circuit2D {
  Lattice2D lat;
  std::vector<Layer2D> layers;
  int depth() const { return static_cast<int>(layers.size()); }
  int dual_layers() const;
};

std::vector<std::pair<Site2, Site2>> bonds_2d(const Lattice2D &lat, Role2D role);
// The fixed word U1 U2 U3 U4 U1 ... truncated to t layers.
std::vector<Role2D> default_roles(int t);

using GateSource2D = std::function<Gate(Role2D, const Site2 &, const Site2 &)>;
Circuit2D build_2d_duqc(const Lattice2D &lat, const std::vector<Role2D> &roles,
                        const GateSource2D &du_source, const GateSource2D &u24_source,
                        double tol = kDefaultTol);
Circuit2D random_2d_duqc(const Lattice2D &lat, int t, std::uint64_t seed);
void validate_2d(const Circuit2D &c, double tol = kDefaultTol);
Schedule to_schedule_2d(const Circuit2D &c);

struct RowsState {
  Lattice2D lat;
  SolvableState chain;  // one chain per column k, running along j
};

RowsState solvable_rows_state(const Lattice2D &lat, const SolvableTensor &A,
                              double tol = kDefaultTol);
std::vector<cplx> rows_statevector(const RowsState &s, int cap = kOracleCap2D);
Statevector evolve_oracle_2d(const Circuit2D &c, const RowsState &init,
                             int cap = kOracleCap2D);

// l x l block of single-qubit factors, factors[a * l + b] on (j0 + a, k0 + b).
struct BlockObservable {
  Site2 origin;
  int l = 1;
  std::vector<Mat2> factors;
  cplx normalized_trace() const;
};

std::vector<std::pair<int, Mat2>> block_targets(const Lattice2D &lat,
                                                const BlockObservable &obs);
Regime classify_regime_2d(int rows, int t, int l, double delta = 0.0);
FastResult expectation_fast_2d(const Circuit2D &c, const RowsState &init,
                               const BlockObservable &obs, const FastOptions &opt = {});
cplx expectation_oracle_2d(const Circuit2D &c, const RowsState &init,
                           const std::vector<std::pair<int, Mat2>> &targets,
                           int cap = kOracleCap2D);
cplx expectation_cone_2d(const Circuit2D &c, const RowsState &init,
                         const std::vector<std::pair<int, Mat2>> &targets,
                         int cap = kConeCap);

// C1 correlates (j, k) with (j, k + r) across the chains; C2 correlates
// (j, k) with (j + r, k) along a chain.
enum class CorrKind { C1, C2 };

struct CorrelationQuery {
  CorrKind kind = CorrKind::C1;
  Site2 site;
  int r = 1;
  Mat2 oa = Mat2::Identity();
  Mat2 ob = Mat2::Identity();
};

struct CorrelationResult {
  cplx value = 0.0;
  std::string method;  // "certified" or "oracle"
  bool certified_zero = false;
};

bool c1_in_regime(const Circuit2D &c, int r);
// True when the light-cone rule leaves C2 free to be nonzero.
bool c2_case_allowed(const Circuit2D &c, const Site2 &site, int r);
bool c2_in_regime(const Circuit2D &c);
CorrelationResult correlation_c1(const Circuit2D &c, const RowsState &init,
                                 const CorrelationQuery &q, int cap = kOracleCap2D);
CorrelationResult correlation_c2(const Circuit2D &c, const RowsState &init,
                                 const CorrelationQuery &q, int cap = kOracleCap2D);
// Oracle value of <Oa Ob> - Tr(Oa) Tr(Ob) / 4 regardless of regime.
cplx correlation_oracle(const Circuit2D &c, const RowsState &init,
                        const CorrelationQuery &q, int cap = kOracleCap2D);

struct Cluster2D {
  Circuit2D circuit;
  std::vector<int> vertex_qubit;  // vertex (j-1) * cols + (k-1) -> qubit
  std::vector<std::vector<int>> adjacency;
};

Cluster2D cluster_circuit_2d(const Lattice2D &lat);

struct KickedIsing2DParams {
  double J = kPi / 4;   // j-direction coupling
  double Jk = kPi / 4;  // k-direction coupling
  double h = 0.0;
  double b = kPi / 4;
  bool self_dual = true;
};

void check_kicked_ising(const KickedIsing2DParams &p);
// e^{-i(J ZZ + h Z(x)I)} (e^{-ibX} (x) e^{-ibX}) e^{-i(J ZZ + h Z(x)I)}.
Gate kicked_ising_kernel(const KickedIsing2DParams &p);
// (U_I2 U_I4 U_KI3 U_I2 U_I4 U_KI1)^periods as 6 layers per period.
Circuit2D kicked_ising_2d_floquet(const Lattice2D &lat, const KickedIsing2DParams &p,
                                  int periods);

enum class IsingPart { I1, I2, I3, I4 };
void apply_ising_part(Statevector &s, const Lattice2D &lat, const KickedIsing2DParams &p,
                      IsingPart part);
void apply_kick(Statevector &s, const Lattice2D &lat, double b);
// One period of U_K U_I applied directly.
void apply_kicked_ising_period(Statevector &s, const Lattice2D &lat,
                               const KickedIsing2DParams &p);

struct FloquetCheck {
  double max_deviation = 0.0;
  double kernel_residual = 0.0;
};

// Compares U_KI^(2t+1) with U_K U_I1 W(t) U_I2 U_I4 U_I3 on random states.
FloquetCheck check_kicked_ising_floquet(const Lattice2D &lat, const KickedIsing2DParams &p,
                                        int periods, int samples, std::uint64_t seed);

}  // namespace duqc

#endif  // DUQC_CIRCUIT2D_HPP
