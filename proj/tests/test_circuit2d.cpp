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

#include <gtest/gtest.h>

#include <cmath>

#include "circuit2d.hpp"
#include "gates.hpp"
#include "random.hpp"

namespace duqc {
namespace {

Mat2 p0() { return 0.5 * (pauli_i() + pauli_z()); }

Mat2 random_single(Rng &rng) {
  const Mat2 ps[4] = {pauli_i(), pauli_x(), pauli_y(), pauli_z()};
  return ps[rng() % 4];
}

BlockObservable random_block(const Lattice2D &lat, int l, Rng &rng) {
  BlockObservable o;
  o.origin = {1 + int(rng() % lat.rows), 1 + int(rng() % lat.cols)};
  o.l = l;
  for (int i = 0; i < l * l; ++i) o.factors.push_back(random_single(rng));
  return o;
}

TEST(Lattice, IndexingWraps) {
  Lattice2D lat = make_lattice(4, 6);
  EXPECT_EQ(lat.num_qubits(), 24);
  EXPECT_EQ(lat.qubit(1, 1), 0);
  EXPECT_EQ(lat.qubit(2, 1), 6);
  EXPECT_EQ(lat.qubit(5, 7), 0);
  EXPECT_EQ(lat.qubit(0, 0), 23);
  EXPECT_THROW(make_lattice(3, 4), Error);
  EXPECT_THROW(make_lattice(4, 0), Error);
}

TEST(Lattice, HoneycombMaskRemovesHalfTheRungs) {
  Lattice2D lat = make_lattice(4, 4);
  apply_honeycomb_mask(lat);
  EXPECT_EQ(lat.masked.size(), 8u);
  EXPECT_TRUE(lat.is_masked({1, 2}, {1, 3}));
  EXPECT_FALSE(lat.is_masked({1, 1}, {1, 2}));
  EXPECT_TRUE(lat.is_masked({1, 3}, {1, 2}));
  EXPECT_FALSE(lat.is_masked({1, 2}, {2, 2}));
}

TEST(Circuit2D, LayerShapes) {
  Lattice2D lat = make_lattice(4, 4);
  for (Role2D r : {Role2D::U1, Role2D::U2, Role2D::U3, Role2D::U4}) {
    auto bonds = bonds_2d(lat, r);
    EXPECT_EQ(bonds.size(), 8u) << role_name(r);
    std::vector<int> hit(16, 0);
    for (auto &[a, b] : bonds) {
      ++hit[lat.qubit(a)];
      ++hit[lat.qubit(b)];
    }
    for (int h : hit) EXPECT_EQ(h, 1);
  }
  auto roles = default_roles(5);
  ASSERT_EQ(roles.size(), 5u);
  EXPECT_EQ(roles[0], Role2D::U1);
  EXPECT_EQ(roles[2], Role2D::U3);
  EXPECT_EQ(roles[4], Role2D::U1);
}

TEST(Circuit2D, RejectsNonDualUnitaryDualLayer) {
  Lattice2D lat = make_lattice(4, 4);
  try {
    build_2d_duqc(
        lat, default_roles(2), [](Role2D, const Site2 &, const Site2 &) { return cz_gate(); },
        [](Role2D, const Site2 &, const Site2 &) { return cz_gate(); });
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Status::NotDualUnitary);
  }
  Circuit2D c = random_2d_duqc(lat, 3, 1);
  std::swap(c.layers[0].role, c.layers[2].role);
  c.layers[0].role = Role2D::U3;
  EXPECT_THROW(validate_2d(c), Error);
}

TEST(Circuit2D, MaskedBondsAreIdentity) {
  Lattice2D lat = make_lattice(4, 4);
  apply_honeycomb_mask(lat);
  Circuit2D c = random_2d_duqc(lat, 4, 2);
  for (const auto &layer : c.layers)
    for (const auto &g : layer.gates)
      if (lat.is_masked(g.from, g.to)) EXPECT_LT((g.g - Gate::Identity()).norm(), 1e-15);
  c.layers[1].gates[0].g = cz_gate();
  bool masked_first = lat.is_masked(c.layers[1].gates[0].from, c.layers[1].gates[0].to);
  if (masked_first) EXPECT_THROW(validate_2d(c), Error);
}

TEST(RowsState, Norms) {
  Lattice2D lat = make_lattice(4, 2);
  auto epr = rows_statevector(solvable_rows_state(lat, epr_tensor()));
  double n = 0;
  for (cplx a : epr) n += std::norm(a);
  EXPECT_NEAR(n, 1.0, 1e-14);
  RowsState s = solvable_rows_state(lat, random_solvable_tensor(2, 4));
  auto v = rows_statevector(s);
  n = 0;
  for (cplx a : v) n += std::norm(a);
  EXPECT_NEAR(n, std::pow(state_norm_sq(s.chain), lat.cols), 1e-10);
}

TEST(Regime2D, Classification) {
  EXPECT_EQ(classify_regime_2d(4, 0, 1), Regime::PreCone);
  EXPECT_EQ(classify_regime_2d(4, 1, 1), Regime::PreCone);
  EXPECT_EQ(classify_regime_2d(4, 2, 1), Regime::Early);
  EXPECT_EQ(classify_regime_2d(4, 3, 1), Regime::Late);
  EXPECT_EQ(classify_regime_2d(8, 6, 1), Regime::Early);
  EXPECT_EQ(classify_regime_2d(8, 7, 1), Regime::Late);
}

TEST(Fast2D, ProjectorIsHalf) {
  Lattice2D lat = make_lattice(4, 4);
  Circuit2D c = random_2d_duqc(lat, 2, 6);
  RowsState s = solvable_rows_state(lat, epr_tensor());
  FastResult f = expectation_fast_2d(c, s, {{2, 3}, 1, {p0()}});
  EXPECT_EQ(f.regime, Regime::Early);
  EXPECT_NEAR(f.value.real(), 0.5, 1e-15);
  EXPECT_NEAR(expectation_oracle_2d(c, s, block_targets(lat, {{2, 3}, 1, {p0()}})).real(), 0.5,
              1e-12);
}

TEST(Fast2DProperty, MatchesOracleInRegime) {
  Lattice2D lat = make_lattice(8, 2);
  RowsState s = solvable_rows_state(lat, epr_tensor());
  Rng rng(3);
  int checked = 0;
  for (int d = 1; d <= 8; ++d)
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      Circuit2D c = random_2d_duqc(lat, d, 100 * d + seed);
      BlockObservable o = random_block(lat, 1, rng);
      try {
        FastResult f = expectation_fast_2d(c, s, o);
        cplx orc = expectation_oracle_2d(c, s, block_targets(lat, o));
        ASSERT_LT(std::abs(f.value - orc), 1e-10) << d << " " << seed;
        ++checked;
      } catch (const LateTimeSignal &) {
      }
    }
  EXPECT_GT(checked, 8);
}

TEST(Fast2D, LateRaises) {
  Lattice2D lat = make_lattice(4, 4);
  Circuit2D c = random_2d_duqc(lat, 5, 1);
  RowsState s = solvable_rows_state(lat, epr_tensor());
  EXPECT_THROW(expectation_fast_2d(c, s, {{1, 1}, 1, {pauli_z()}}), LateTimeSignal);
}

TEST(Fast2D, HoneycombAgreesWithSquare) {
  Lattice2D sq = make_lattice(4, 4), hc = sq;
  apply_honeycomb_mask(hc);
  RowsState s = solvable_rows_state(sq, epr_tensor());
  RowsState sh = solvable_rows_state(hc, epr_tensor());
  BlockObservable o{{2, 2}, 1, {pauli_x()}};
  FastResult a = expectation_fast_2d(random_2d_duqc(sq, 2, 4), s, o);
  FastResult b = expectation_fast_2d(random_2d_duqc(hc, 2, 4), sh, o);
  EXPECT_NEAR(std::abs(a.value - b.value), 0.0, 1e-15);
  Circuit2D hcirc = random_2d_duqc(hc, 2, 4);
  EXPECT_NEAR(std::abs(expectation_oracle_2d(hcirc, sh, block_targets(hc, o)) - b.value), 0.0,
              1e-10);
}

TEST(Correlation, C1ZeroInRegime) {
  Lattice2D lat = make_lattice(4, 4);
  RowsState s = solvable_rows_state(lat, epr_tensor());
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Circuit2D c = random_2d_duqc(lat, 1 + seed % 2, seed);
    for (int r = 1; r < 4; ++r) {
      CorrelationQuery q{CorrKind::C1, {1 + int(seed % 4), 2}, r, pauli_z(), pauli_x()};
      ASSERT_TRUE(c1_in_regime(c, r));
      CorrelationResult res = correlation_c1(c, s, q);
      EXPECT_TRUE(res.certified_zero);
      EXPECT_LT(std::abs(correlation_oracle(c, s, q)), 1e-12) << seed << " " << r;
    }
  }
}

TEST(Correlation, C1GeneralTensorGoesToOracle) {
  Lattice2D lat = make_lattice(4, 2);
  RowsState s = solvable_rows_state(lat, random_solvable_tensor(2, 1));
  Circuit2D c = random_2d_duqc(lat, 1, 3);
  CorrelationResult res = correlation_c1(c, s, {CorrKind::C1, {1, 1}, 1, pauli_z(), pauli_z()});
  EXPECT_FALSE(res.certified_zero);
  EXPECT_EQ(res.method, "oracle");
}

void check_c2_filter(int rows, int cols, int dmax, int seeds) {
  Lattice2D lat = make_lattice(rows, cols);
  RowsState s = solvable_rows_state(lat, epr_tensor());
  Rng rng(5);
  for (int d = 0; d <= dmax; ++d)
    for (int seed = 0; seed < seeds; ++seed) {
      Circuit2D c = random_2d_duqc(lat, d, 7 * d + seed);
      if (!c2_in_regime(c)) continue;
      for (int j = 1; j <= rows; ++j)
        for (int r = -rows + 1; r < rows; ++r) {
          CorrelationQuery q{CorrKind::C2, {j, 1}, r, random_single(rng), random_single(rng)};
          if (c2_case_allowed(c, q.site, r)) continue;
          ASSERT_LT(std::abs(correlation_oracle(c, s, q)), 1e-10)
              << rows << "x" << cols << " d=" << d << " j=" << j << " r=" << r;
        }
    }
}

TEST(Correlation, C2FilterSound4x4) { check_c2_filter(4, 4, 1, 3); }
TEST(Correlation, C2FilterSound8x2) { check_c2_filter(8, 2, 2, 2); }

TEST(Correlation, C2SameSiteUsesOracle) {
  Lattice2D lat = make_lattice(4, 4);
  RowsState s = solvable_rows_state(lat, epr_tensor());
  Circuit2D c = random_2d_duqc(lat, 1, 2);
  EXPECT_TRUE(c2_case_allowed(c, {1, 1}, 0));
  EXPECT_TRUE(c2_case_allowed(c, {1, 1}, 4));
  CorrelationResult res = correlation_c2(c, s, {CorrKind::C2, {1, 1}, 0, pauli_z(), pauli_z()});
  EXPECT_FALSE(res.certified_zero);
  EXPECT_NEAR(res.value.real(), 1.0, 1e-12);
}

TEST(Cluster2D, StabilizersOn4x4) {
  Lattice2D lat = make_lattice(4, 4);
  Cluster2D cl = cluster_circuit_2d(lat);
  EXPECT_EQ(cl.circuit.depth(), 4);
  Statevector st = evolve_oracle_2d(cl.circuit, solvable_rows_state(lat, epr_tensor()));
  StabilizerReport r = verify_stabilizers(st, cl.adjacency, cl.vertex_qubit);
  EXPECT_TRUE(r.pass) << r.worst_deviation;
  for (const auto &nb : cl.adjacency) EXPECT_EQ(nb.size(), 4u);
  EXPECT_THROW(cluster_circuit_2d(make_lattice(4, 6)), Error);
  EXPECT_THROW(cluster_circuit_2d(make_lattice(2, 2)), Error);
}

TEST(KickedIsing2D, KernelIsDualUnitaryAtSelfDualPoint) {
  KickedIsing2DParams p;
  p.h = 0.37;
  Gate k = kicked_ising_kernel(p);
  EXPECT_TRUE(is_unitary(k));
  EXPECT_TRUE(is_dual_unitary(k));
  p.J = 0.3;
  EXPECT_THROW(check_kicked_ising(p), Error);
  p.self_dual = false;
  EXPECT_NO_THROW(check_kicked_ising(p));
  EXPECT_FALSE(is_dual_unitary(kicked_ising_kernel(p)));
}

TEST(KickedIsing2D, TransverseCouplingIsFree) {
  KickedIsing2DParams p;
  p.Jk = 0.3;
  p.h = 1.1;
  EXPECT_NO_THROW(kicked_ising_2d_floquet(make_lattice(4, 4), p, 1));
}

TEST(KickedIsing2D, FloquetMatchesDirectEvolution) {
  KickedIsing2DParams p;
  p.h = 0.61;
  p.Jk = 0.27;
  for (int periods : {1, 2}) {
    FloquetCheck fc = check_kicked_ising_floquet(make_lattice(4, 2), p, periods, 2, 11);
    EXPECT_LT(fc.max_deviation, 1e-10) << periods;
    EXPECT_LT(fc.kernel_residual, 1e-12);
  }
}

}  // namespace
}  // namespace duqc
