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

#include "circuit1d.hpp"
#include "gates.hpp"
#include "random.hpp"

namespace duqc {
namespace {

double cz_deviation(const Circuit1D &c, int a, int b) {
  MatX U = assemble_unitary(c.num_qubits(), to_schedule(c));
  cplx phase = U(0, 0) / std::abs(U(0, 0));
  double dev = 0;
  for (int r = 0; r < U.rows(); ++r)
    for (int col = 0; col < U.cols(); ++col) {
      cplx want = 0.0;
      if (r == col) want = (((r >> (a - 1)) & 1) && ((r >> (b - 1)) & 1)) ? -1.0 : 1.0;
      dev = std::max(dev, std::abs(U(r, col) / phase - want));
    }
  return dev;
}

int count_cz_slots(const Circuit1D &c) {
  int k = 0;
  const Gate sc = swap_gate() * cz_gate();
  for (const auto &layer : c.layers)
    for (const BondGate &bg : layer) k += (bg.g - sc).cwiseAbs().maxCoeff() < 1e-14;
  return k;
}

TEST(CzCompiler, AllValidPairsSmallChains) {
  for (int N : {2, 3, 4}) {
    const int n = 2 * N;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; b += 2) {
        Circuit1D c = compile_long_range_cz(N, a, b);
        ASSERT_EQ(c.depth(), n);
        ASSERT_EQ(count_cz_slots(c), 1);
        ASSERT_LT(cz_deviation(c, a, b), 1e-10) << n << " " << a << " " << b;
      }
  }
}

TEST(CzCompiler, SameParityUnreachable) {
  try {
    compile_long_range_cz(3, 1, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Status::Unreachable);
  }
  EXPECT_THROW(compile_long_range_cz(3, 0, 3), Error);
}

TEST(CzCompiler, ParallelPairs) {
  Circuit1D c = compile_parallel_cz(3, {{1, 4}, {2, 5}});
  MatX U = assemble_unitary(6, to_schedule(c));
  cplx phase = U(0, 0);
  for (int x = 0; x < 64; ++x) {
    int s = 1;
    if ((x & 1) && (x >> 3 & 1)) s = -s;
    if ((x >> 1 & 1) && (x >> 4 & 1)) s = -s;
    EXPECT_NEAR(std::abs(U(x, x) / phase - double(s)), 0.0, 1e-12);
  }
}

TargetCircuit h_measure() {
  TargetCircuit t;
  t.n = 1;
  t.ops = {{TargetOp::Kind::Single, 1, 2, hadamard()}};
  return t;
}

TargetCircuit ghz_prep() {
  TargetCircuit t;
  t.n = 2;
  t.ops = {{TargetOp::Kind::Single, 1, 2, hadamard()},
           {TargetOp::Kind::Single, 2, 2, hadamard()},
           {TargetOp::Kind::CZ, 1, 2, Mat2::Identity()},
           {TargetOp::Kind::Single, 2, 2, hadamard()}};
  return t;
}

TargetCircuit identity_target() {
  TargetCircuit t;
  t.n = 2;
  t.readout = 2;
  return t;
}

TEST(Universal, TargetValues) {
  EXPECT_NEAR(simulate_target(h_measure()), 0.5, 1e-15);
  EXPECT_NEAR(simulate_target(ghz_prep()), 0.5, 1e-15);
  EXPECT_NEAR(simulate_target(identity_target()), 1.0, 1e-15);
}

void check_embedding(const TargetCircuit &t, int N) {
  UniversalEmbedding e = compile_universal(t, N);
  LocalObservable p0{e.readout_site, {0.5 * (pauli_i() + pauli_z())}};
  double got = expectation_oracle(e.circuit, epr_chain(N), p0).real();
  EXPECT_NEAR(got, simulate_target(t), 1e-8);
  EXPECT_GT(e.prologue_layers, 0);
}

TEST(Universal, ThreeTargets) {
  check_embedding(h_measure(), 3);
  check_embedding(ghz_prep(), 3);
  check_embedding(identity_target(), 3);
}

TEST(UniversalProperty, RandomTargets) {
  Rng rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    TargetCircuit t;
    t.n = 3;
    t.readout = 1 + trial % 3;
    for (int k = 0; k < 6; ++k) {
      if (k % 2) {
        int q = 1 + k % 2;
        t.ops.push_back({TargetOp::Kind::CZ, q, q + 1, Mat2::Identity()});
      } else {
        t.ops.push_back({TargetOp::Kind::Single, 1 + (k / 2) % 3, 2, haar_unitary(2, rng)});
      }
    }
    check_embedding(t, 4);
  }
}

TEST(Universal, RejectsBadTargets) {
  TargetCircuit t = ghz_prep();
  EXPECT_THROW(compile_universal(t, 1), Error);
  t.ops.push_back({TargetOp::Kind::CZ, 1, 1, Mat2::Identity()});
  EXPECT_THROW(compile_universal(t, 3), Error);
}

TEST(Cluster1D, TorusAdjacencyIsSimple) {
  auto two = torus_adjacency(2, 2);
  for (const auto &nb : two) EXPECT_EQ(nb.size(), 2u);
  auto four = torus_adjacency(4, 4);
  for (const auto &nb : four) EXPECT_EQ(nb.size(), 4u);
}

TEST(Cluster1D, StabilizersSmallAndMedium) {
  for (int m : {1, 2}) {
    Cluster1D cl = cluster_circuit_1d(m);
    EXPECT_EQ(cl.circuit.depth(), cl.circuit.num_cells - m + 1);
    Statevector s = evolve_oracle(cl.circuit, epr_chain(cl.circuit.num_cells));
    std::vector<int> vq;
    for (int site : cl.vertex_site) vq.push_back(site - 1);
    StabilizerReport r = verify_stabilizers(s, cl.adjacency, vq);
    EXPECT_TRUE(r.pass) << m << " worst " << r.worst_deviation;
  }
}

TEST(Cluster1D, DistributionMatchesDirectClusterState) {
  Cluster1D cl = cluster_circuit_1d(1);
  Statevector s = evolve_oracle(cl.circuit, epr_chain(2));
  Statevector direct(4);
  for (int q = 0; q < 4; ++q) apply_one_qubit(direct, hadamard(), q);
  for (int v = 0; v < 4; ++v)
    for (int u : cl.adjacency[v])
      if (u > v) apply_two_qubit(direct, cz_gate(), v, u);
  for (int x = 0; x < 16; ++x) {
    int y = 0;
    for (int v = 0; v < 4; ++v)
      if ((x >> v) & 1) y |= 1 << (cl.vertex_site[v] - 1);
    EXPECT_NEAR(std::norm(direct.amplitudes()[x]), std::norm(s.amplitudes()[y]), 1e-10);
  }
}

}  // namespace
}  // namespace duqc
