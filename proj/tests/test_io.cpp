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

#include "gates.hpp"
#include "io.hpp"

namespace duqc {
namespace {

Status code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  return Status::Ok;
}

TEST(Io, ComplexAndMatrix) {
  EXPECT_EQ(io::complex_from_json(io::complex_to_json({1.5, -2})), cplx(1.5, -2));
  EXPECT_EQ(io::complex_from_json(io::json(3.0)), cplx(3.0, 0));
  EXPECT_EQ(code_of([] { io::complex_from_json(io::json::array({1, 2, 3})); }), Status::Parse);
  MatX m = MatX::Random(3, 2);
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(m), 3, 2), m);
  io::json flat = io::json::array({1, 0, 0, 1});
  EXPECT_EQ(io::matrix_from_json(flat, 2, 2), MatX(Mat2::Identity()));
  EXPECT_EQ(code_of([&] { io::matrix_from_json(flat, 3, 3); }), Status::Parse);
}

TEST(Io, GateRoundTripAndKinds) {
  Gate g = random_dual_unitary(std::uint64_t(12));
  EXPECT_LT((io::gate_from_json(io::gate_to_json(g)) - g).norm(), 1e-15);
  auto named = [](const char *text) { return io::gate_from_json(io::parse_text(text)); };
  EXPECT_EQ(named(R"({"kind":"named","name":"swap"})"), swap_gate());
  EXPECT_EQ(named(R"({"kind":"named","name":"cz"})"), cz_gate());
  EXPECT_TRUE(is_dual_unitary(named(R"({"kind":"named","name":"xxz","J":0.4})")));
  EXPECT_TRUE(is_dual_unitary(named(R"({"kind":"named","name":"kicked_ising","h":0.2})")));
  Gate dp = named(R"({"kind":"dual_params","phi":0.1,"alpha":0.7})");
  EXPECT_TRUE(is_dual_unitary(dp));
  EXPECT_EQ(code_of([&] { named(R"({"kind":"named","name":"toffoli"})"); }), Status::Parse);
  EXPECT_EQ(code_of([&] { named(R"({"kind":"nope"})"); }), Status::Parse);
  EXPECT_EQ(code_of([&] { named(R"({"name":"swap"})"); }), Status::Parse);
}

TEST(Io, MalformedText) {
  EXPECT_EQ(code_of([] { io::parse_text("{\"kind\": "); }), Status::Parse);
  EXPECT_EQ(code_of([] { io::read_file("/nonexistent/duqc.json"); }), Status::Parse);
}

TEST(Io, TensorRoundTrip) {
  SolvableTensor A = random_solvable_tensor(2, 9);
  SolvableTensor B = io::tensor_from_json(io::tensor_to_json(A));
  ASSERT_EQ(B.chi, 2);
  for (int i = 0; i < 4; ++i) EXPECT_LT((A.blocks[i] - B.blocks[i]).norm(), 1e-15);
  io::json j = io::tensor_to_json(A);
  j["blocks"].erase("11");
  EXPECT_EQ(code_of([&] { io::tensor_from_json(j); }), Status::Parse);
}

TEST(Io, Circuit1DRoundTrip) {
  Circuit1D c = random_brickwork(3, 4, 5);
  Circuit1D d = io::circuit1d_from_json(io::circuit1d_to_json(c));
  ASSERT_EQ(d.depth(), 4);
  for (int t = 0; t < 4; ++t)
    for (std::size_t i = 0; i < c.layers[t].size(); ++i) {
      EXPECT_EQ(c.layers[t][i].bond, d.layers[t][i].bond);
      EXPECT_LT((c.layers[t][i].g - d.layers[t][i].g).norm(), 1e-15);
    }
  io::json open = io::circuit1d_to_json(random_brickwork(3, 2, 1, Boundary::Open));
  EXPECT_EQ(io::circuit1d_from_json(open).boundary, Boundary::Open);
}

TEST(Io, Circuit1DRejects) {
  io::json j = io::circuit1d_to_json(random_brickwork(2, 2, 5));
  io::json odd = j;
  odd["qubits"] = 5;
  EXPECT_EQ(code_of([&] { io::circuit1d_from_json(odd); }), Status::Parse);
  io::json notdu = j;
  notdu["layers"][0]["gates"][0]["gate"] = io::gate_to_json(cz_gate());
  EXPECT_EQ(code_of([&] { io::circuit1d_from_json(notdu); }), Status::NotDualUnitary);
  io::json bond = j;
  bond["layers"][0]["gates"][0]["bond"] = 1;
  EXPECT_NE(code_of([&] { io::circuit1d_from_json(bond); }), Status::Ok);
  io::json bnd = j;
  bnd["boundary"] = "twisted";
  EXPECT_EQ(code_of([&] { io::circuit1d_from_json(bnd); }), Status::Parse);
}

TEST(Io, Circuit2DRoundTrip) {
  Lattice2D lat = make_lattice(4, 4);
  apply_honeycomb_mask(lat);
  Circuit2D c = random_2d_duqc(lat, 3, 8);
  io::json j = io::circuit2d_to_json(c);
  EXPECT_TRUE(io::is_circuit2d(j));
  EXPECT_FALSE(io::is_circuit2d(io::circuit1d_to_json(random_brickwork(2, 1, 1))));
  Circuit2D d = io::circuit2d_from_json(j);
  EXPECT_EQ(d.lat.masked, lat.masked);
  ASSERT_EQ(d.depth(), 3);
  for (int t = 0; t < 3; ++t) {
    EXPECT_EQ(d.layers[t].role, c.layers[t].role);
    ASSERT_EQ(d.layers[t].gates.size(), c.layers[t].gates.size());
    for (std::size_t i = 0; i < c.layers[t].gates.size(); ++i) {
      EXPECT_EQ(d.layers[t].gates[i].from, c.layers[t].gates[i].from);
      EXPECT_LT((d.layers[t].gates[i].g - c.layers[t].gates[i].g).norm(), 1e-15);
    }
  }
  io::json bad = j;
  bad["edge_mask"] = io::json::parse("[[[1,1],[2,1]]]");
  EXPECT_EQ(code_of([&] { io::circuit2d_from_json(bad); }), Status::Parse);
  bad = j;
  bad["layers"][0]["role"] = "U7";
  EXPECT_EQ(code_of([&] { io::circuit2d_from_json(bad); }), Status::Parse);
}

TEST(Io, Observable1D) {
  LocalObservable a = io::parse_observable_1d("Z@3");
  EXPECT_EQ(a.start_site, 3);
  ASSERT_EQ(a.length(), 1);
  EXPECT_EQ(a.factors[0], pauli_z());
  LocalObservable b = io::parse_observable_1d("XP1@4,5");
  ASSERT_EQ(b.length(), 2);
  EXPECT_EQ(b.factors[1], Mat2(0.5 * (pauli_i() - pauli_z())));
  EXPECT_EQ(io::parse_observable_1d("ZZ@7").start_site, 7);
  LocalObservable c = io::parse_observable_1d(R"({"start":2,"factors":[[1,0,0,-1]]})");
  EXPECT_EQ(c.factors[0], pauli_z());
  for (const char *bad : {"Z", "Q@1", "ZZ@1,3", "ZZ@1,2,3", "P2@1", "Z@x", "Z@0", "@1"}) {
    EXPECT_EQ(code_of([&] { io::parse_observable_1d(bad); }), Status::Parse) << bad;
  }
}

TEST(Io, Observable2D) {
  BlockObservable a = io::parse_observable_2d("Z@2:3");
  EXPECT_EQ(a.origin, (Site2{2, 3}));
  EXPECT_EQ(a.l, 1);
  BlockObservable b = io::parse_observable_2d("XYZI@1:1");
  EXPECT_EQ(b.l, 2);
  EXPECT_EQ(b.factors[2], pauli_z());
  for (const char *bad : {"ZZ@1:1", "Z@1", "Z@1:y"}) {
    EXPECT_EQ(code_of([&] { io::parse_observable_2d(bad); }), Status::Parse) << bad;
  }
}

TEST(Io, FastResultJson) {
  FastResult r;
  r.value = {0.25, 0};
  r.regime = Regime::PreCone;
  io::json j = io::fast_result_to_json(r);
  EXPECT_EQ(j["method"], "fast");
  EXPECT_EQ(j["value"][0], 0.25);
  EXPECT_EQ(j["regime"], regime_name(Regime::PreCone));
  EXPECT_STREQ(io::status_name(Status::LateRegime), "late-regime");
}

}  // namespace
}  // namespace duqc
