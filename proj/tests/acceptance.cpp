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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "circuit1d.hpp"
#include "circuit2d.hpp"
#include "gates.hpp"
#include "random.hpp"

using namespace duqc;

namespace {

constexpr double kTolExact = 1e-10;
constexpr double kTolTrace = 1e-14;
constexpr double kTolEmbed = 1e-8;
constexpr double kTolFloquet = 1e-8;
constexpr double kSlopeRel = 0.15;
constexpr double kNoiseFloor = 1e-12;
constexpr double kC2Witness = 0.01;
constexpr double kFastBudgetSec = 0.1;
constexpr double kOracleGrowth = 8.0;
constexpr double kRegimeDelta = 1e-6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string &what) {
  std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char *f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Mat2 random_word_factor(Rng &rng) {
  switch (rng() % 6) {
    case 0:
      return pauli_i();
    case 1:
      return pauli_x();
    case 2:
      return pauli_y();
    case 3:
      return pauli_z();
    case 4:
      return 0.5 * (pauli_i() + pauli_z());
    default:
      return 0.5 * (pauli_i() - pauli_z());
  }
}

void criterion1() {
  auto t0 = Clock::now();
  Rng rng(101);
  const int sizes[3] = {8, 10, 12};
  int early = 0, cone = 0;
  double worst = 0, worst_trace = 0;
  bool budget_zero = true;
  FastOptions opt;
  opt.delta = kRegimeDelta;
  for (int i = 0; i < 200; ++i) {
    const int n = sizes[i % 3], N = n / 2, l = 1 + (i / 3) % 2;
    std::vector<int> valid;
    for (int t = 1; 2 * t <= n - l; ++t)
      if (classify_regime_1d(N, t, l, kRegimeDelta) != Regime::Late) valid.push_back(t);
    const int t = valid[(i / 6) % valid.size()];
    Circuit1D c = random_brickwork(N, t, 5000 + i);
    LocalObservable o;
    o.start_site = 1 + int(rng() % n);
    for (int k = 0; k < l; ++k) o.factors.push_back(random_word_factor(rng));
    FastResult f = expectation_fast(c, epr_chain(N), o, opt);
    cplx orc = expectation_oracle(c, epr_chain(N), o);
    worst = std::max(worst, std::abs(f.value - orc));
    if (f.regime == Regime::Early) {
      ++early;
      worst_trace = std::max(worst_trace, std::abs(f.value - o.normalized_trace()));
      budget_zero = budget_zero && f.budget.bound == 0.0;
    } else {
      ++cone;
    }
  }
  const double secs = seconds_since(t0);
  bool ok = worst <= kTolExact && worst_trace <= kTolTrace && budget_zero && secs <= 120 && early > 0;
  report(1, ok,
         fmt("early-time EPR: 200 circuits (%g early, %g light-cone), max |fast-oracle| = %.2e, "
             "max |fast-Tr/2^l| = %.2e",
             early, cone, worst, worst_trace) +
             fmt(", %.1f s", secs));
}

struct Fit {
  double slope = 0;
  int points = 0;
};

Fit least_squares(const std::vector<double> &x, const std::vector<double> &y) {
  Fit f;
  f.points = static_cast<int>(x.size());
  if (f.points < 2) return f;
  double mx = 0, my = 0;
  for (int i = 0; i < f.points; ++i) mx += x[i], my += y[i];
  mx /= f.points;
  my /= f.points;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < f.points; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  f.slope = sxy / sxx;
  return f;
}

void criterion2() {
  auto t0 = Clock::now();
  const int l = 2, t = 2;
  bool ok = true;
  std::string detail;
  double cross = 0;
  for (std::uint64_t seed : {3, 11, 29}) {
    SolvableTensor A = random_solvable_tensor(2, seed);
    const double ll1 = std::log(transfer_spectrum(A).lambda1_mod());
    Rng rng(seed);
    Gate g1 = random_dual_unitary(rng), g2 = random_dual_unitary(rng);
    LocalObservable o{1, {pauli_z(), pauli_z()}};
    std::vector<double> xs, ys;
    for (int N = 5; N <= 16; ++N) {
      Circuit1D c = build_brickwork(N, t, [&](int tau, int) { return tau == 1 ? g1 : g2; });
      SolvableState s;
      s.tensor = A;
      s.num_cells = N;
      cplx exact = expectation_cone(c, s, o);
      if (N <= 7) cross = std::max(cross, std::abs(exact - expectation_oracle(c, s, o)));
      double res = std::abs(exact - o.normalized_trace());
      if (res <= kNoiseFloor) continue;
      xs.push_back(2.0 * N - l - 2 * t);
      ys.push_back(std::log(res));
    }
    Fit f = least_squares(xs, ys);
    const double ratio = f.slope / ll1;
    ok = ok && f.points >= 4 && std::abs(ratio - 1.0) <= kSlopeRel;
    detail += fmt(" %.3f", ratio);
  }
  ok = ok && cross <= kTolExact;
  const double secs = seconds_since(t0);
  ok = ok && secs <= 300;
  report(2, ok,
         "error-bound decay: slope / log|l1| =" + detail +
             fmt(" (want 1 +- %.2f), cone-vs-oracle %.1e, %.1f s", kSlopeRel, cross, secs));
}

void criterion3() {
  bool ok = is_dual_unitary(swap_gate()) && !is_dual_unitary(cz_gate()) &&
            !is_dual_unitary(Gate::Identity());
  for (double J : {0.0, 0.3, 1.1, -0.7}) ok = ok && is_dual_unitary(xxz_kernel(J));
  for (double h : {0.0, 0.4, 2.2})
    ok = ok && is_dual_unitary(named_gate({GateFamily::KickedIsing, kPi / 4, h}));
  Rng rng(2024);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    Gate g = random_dual_unitary(rng);
    worst = std::max({worst, dual_unitarity_residual(g), unitarity_residual(g)});
  }
  ok = ok && worst <= kTolExact;
  report(3, ok, fmt("gate classification: named families pass, CZ and I fail, 1000 random gates "
                    "worst residual %.2e",
                    worst));
}

void criterion4() {
  double worst = 0;
  bool depth_ok = true, unreachable = true;
  int pairs = 0;
  for (int N : {2, 3, 4}) {
    const int n = 2 * N;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        if ((b - a) % 2 == 0) {
          try {
            compile_long_range_cz(N, a, b);
            unreachable = false;
          } catch (const Error &e) {
            unreachable = unreachable && e.code() == Status::Unreachable;
          }
          continue;
        }
        Circuit1D c = compile_long_range_cz(N, a, b);
        depth_ok = depth_ok && c.depth() == n;
        MatX U = assemble_unitary(n, to_schedule(c));
        cplx phase = U(0, 0) / std::abs(U(0, 0));
        for (int r = 0; r < U.rows(); ++r)
          for (int q = 0; q < U.cols(); ++q) {
            cplx want = 0.0;
            if (r == q) want = (((r >> (a - 1)) & 1) && ((r >> (b - 1)) & 1)) ? -1.0 : 1.0;
            worst = std::max(worst, std::abs(U(r, q) / phase - want));
          }
        ++pairs;
      }
  }
  report(4, worst <= kTolExact && depth_ok && unreachable,
         fmt("CZ compiler: %g parity pairs on 2N in {4,6,8}, max deviation %.2e, depth = 2N, "
             "same-parity pairs unreachable",
             pairs, worst));
}

void criterion5() {
  TargetCircuit hm;
  hm.n = 1;
  hm.ops = {{TargetOp::Kind::Single, 1, 2, hadamard()}};
  TargetCircuit ghz;
  ghz.n = 3;
  ghz.readout = 3;
  ghz.ops = {{TargetOp::Kind::Single, 1, 2, hadamard()},
             {TargetOp::Kind::Single, 2, 2, hadamard()},
             {TargetOp::Kind::CZ, 1, 2, Mat2::Identity()},
             {TargetOp::Kind::Single, 2, 2, hadamard()},
             {TargetOp::Kind::Single, 3, 2, hadamard()},
             {TargetOp::Kind::CZ, 2, 3, Mat2::Identity()},
             {TargetOp::Kind::Single, 3, 2, hadamard()}};
  TargetCircuit id;
  id.n = 2;
  id.readout = 2;
  double worst = 0;
  std::string vals;
  for (const TargetCircuit *tc : {&hm, &ghz, &id}) {
    UniversalEmbedding e = compile_universal(*tc, 4);
    LocalObservable p0{e.readout_site, {0.5 * (pauli_i() + pauli_z())}};
    double got = expectation_oracle(e.circuit, epr_chain(4), p0).real();
    double want = simulate_target(*tc);
    worst = std::max(worst, std::abs(got - want));
    vals += fmt(" %.4f", want);
  }
  report(5, worst <= kTolEmbed,
         "universal embedding: H-measure, GHZ-prep, identity c_n =" + vals +
             fmt(", max |DUQC - target| = %.2e", worst));
}

void criterion6() {
  Cluster1D c1 = cluster_circuit_1d(2);
  Statevector s1 = evolve_oracle(c1.circuit, epr_chain(c1.circuit.num_cells));
  std::vector<int> vq;
  for (int site : c1.vertex_site) vq.push_back(site - 1);
  StabilizerReport r1 = verify_stabilizers(s1, c1.adjacency, vq);
  Lattice2D lat = make_lattice(4, 4);
  Cluster2D c2 = cluster_circuit_2d(lat);
  Statevector s2 = evolve_oracle_2d(c2.circuit, solvable_rows_state(lat, epr_tensor()));
  StabilizerReport r2 = verify_stabilizers(s2, c2.adjacency, c2.vertex_qubit);
  bool ok = r1.pass && r2.pass && s1.num_qubits() == 16 && c2.circuit.depth() == 4 &&
            r1.worst_deviation <= kTolExact && r2.worst_deviation <= kTolExact;
  report(6, ok,
         fmt("cluster states: 1D 16 qubits worst %.1e, 2D 4x4 worst %.1e, 2D depth %g",
             r1.worst_deviation, r2.worst_deviation, c2.circuit.depth()));
}

Mat2 random_pauli(Rng &rng) {
  const Mat2 ps[3] = {pauli_x(), pauli_y(), pauli_z()};
  return ps[rng() % 3];
}

void criterion7() {
  Rng rng(77);
  Lattice2D sq = make_lattice(4, 4);
  RowsState s44 = solvable_rows_state(sq, epr_tensor());
  double c1_worst = 0;
  bool c1_certified = true;
  for (int i = 0; i < 100; ++i) {
    Circuit2D c = random_2d_duqc(sq, 1 + i % 2, 900 + i);
    for (int r = 1; r < sq.cols; ++r) {
      if (!c1_in_regime(c, r)) {
        c1_certified = false;
        continue;
      }
      CorrelationQuery q{CorrKind::C1, {1 + int(rng() % 4), 1 + int(rng() % 4)}, r,
                         random_pauli(rng), random_pauli(rng)};
      c1_certified = c1_certified && correlation_c1(c, s44, q).certified_zero;
      c1_worst = std::max(c1_worst, std::abs(correlation_oracle(c, s44, q)));
    }
  }

  double c2_false_zero = 0;
  int forbidden = 0, allowed = 0;
  for (auto [rows, cols] : {std::pair{4, 4}, std::pair{8, 2}}) {
    Lattice2D lat = make_lattice(rows, cols);
    RowsState s = solvable_rows_state(lat, epr_tensor());
    for (int depth = 0; depth <= 4; ++depth)
      for (int seed = 0; seed < 2; ++seed) {
        Circuit2D c = random_2d_duqc(lat, depth, 40 * depth + seed);
        if (!c2_in_regime(c)) continue;
        Statevector st = evolve_oracle_2d(c, s);
        for (int j = 1; j <= rows; ++j)
          for (int r = 1 - rows; r < rows; ++r) {
            if (r == 0) continue;
            if (c2_case_allowed(c, {j, 1}, r)) {
              ++allowed;
              continue;
            }
            ++forbidden;
            for (const Mat2 &a : {pauli_x(), pauli_y(), pauli_z()})
              for (const Mat2 &b : {pauli_x(), pauli_y(), pauli_z()}) {
                cplx v = expectation_product(st, {{lat.qubit(j, 1), a}, {lat.qubit(j + r, 1), b}});
                c2_false_zero = std::max(c2_false_zero, std::abs(v));
              }
          }
      }
  }

  Lattice2D strip = make_lattice(8, 2);
  RowsState s82 = solvable_rows_state(strip, epr_tensor());
  double witness = 0;
  for (std::uint64_t seed = 0; seed < 10 && witness <= kC2Witness; ++seed) {
    Rng pr(seed);
    KickedIsing2DParams p;
    p.h = uniform(pr, 0, kPi);
    p.Jk = uniform(pr, 0, kPi);
    Circuit2D c = kicked_ising_2d_floquet(strip, p, 1);
    const int t = 2 * c.dual_layers();
    CorrelationQuery q{CorrKind::C2, {1, 1}, t, pauli_x(), pauli_x()};
    witness = std::max(witness, std::abs(correlation_oracle(c, s82, q)));
  }

  bool ok = c1_worst <= kTolExact && c1_certified && c2_false_zero <= kTolExact &&
            witness > kC2Witness;
  report(7, ok,
         fmt("correlations: C1 max %.1e over 100 circuits; C2 filter %g forbidden cases max %.1e "
             "(%g allowed);",
             c1_worst, forbidden, c2_false_zero, allowed) +
             fmt(" kicked-Ising max |C2(t,t)| = %.4f", witness));
}

void criterion8() {
  KickedIsing2DParams p;
  p.h = 0.43;
  p.Jk = 0.71;
  FloquetCheck fc = check_kicked_ising_floquet(make_lattice(4, 4), p, 1, 3, 5);
  Gate k = kicked_ising_kernel(p);
  bool du = is_unitary(k) && is_dual_unitary(k);
  report(8, fc.max_deviation <= kTolFloquet && du,
         fmt("kicked-Ising Floquet 4x4 t=1: max deviation %.2e, kernel dual-unitary residual %.1e",
             fc.max_deviation, dual_unitarity_residual(k)));
}

void criterion9() {
  Rng rng(909);
  double worst = 0;
  int draws = 0;
  for (int t = 1; t <= 3; ++t)
    for (int i = 0; i < 50; ++i) {
      Circuit1D c = random_brickwork(4, t, 7000 + 100 * t + i, Boundary::Open);
      SolvableState s = epr_chain(4);
      if (i % 2) {
        s.tensor = random_solvable_tensor(2, 300 + i);
        s.boundary = BoundaryKind::Fixed;
        s.alpha = int(rng() % 2);
        s.beta = int(rng() % 2);
      }
      const int l = 1 + i % 2;
      LocalObservable o;
      o.start_site = (i / 2) % 2 ? 1 + int(rng() % (5 - l)) : 5 + int(rng() % (5 - l));
      for (int k = 0; k < l; ++k) o.factors.push_back(random_word_factor(rng));
      if (std::abs(expectation_oracle(c, s, {1, {pauli_i()}})) < 1e-12) continue;
      worst = std::max(worst, std::abs(obc_boundary_expectation(c, s, o) -
                                       expectation_oracle(c, s, o)));
      ++draws;
    }
  report(9, worst <= kTolExact && draws >= 140,
         fmt("open boundary 2N=8, t=1..3: %g draws, max |ladder - oracle| = %.2e", draws, worst));
}

template <typename F>
double best_time(int repeats, F &&f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

void criterion10() {
  LocalObservable o{1, {pauli_z(), pauli_z()}};
  volatile double sink = 0;
  double fast = best_time(3, [&] {
    sink = expectation_fast_analytic(500000, 100, o, epr_tensor()).value.real();
  });
  std::vector<double> times;
  for (int n : {8, 10, 12}) {
    Circuit1D c = random_brickwork(n / 2, 4, 17);
    times.push_back(best_time(20, [&] { sink = expectation_oracle(c, epr_chain(n / 2), o).real(); }));
  }
  const double g1 = times[1] / times[0], g2 = times[2] / times[1];
  bool ok = fast < kFastBudgetSec && g1 >= kOracleGrowth && g2 >= kOracleGrowth;
  report(10, ok,
         fmt("performance: fast 2N=1e6 t=100 %.2e s; oracle growth 8->10 %.2fx, 10->12 %.2fx "
             "(want >= %.0fx)",
             fast, g1, g2, kOracleGrowth));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3, criterion4,
                                                  criterion5, criterion6, criterion7, criterion8,
                                                  criterion9, criterion10};
  for (std::size_t i = 0; i < all.size(); ++i) {
    try {
      all[i]();
    } catch (const std::exception &e) {
      report(int(i + 1), false, std::string("error: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, all.size());
  return failures ? 1 : 0;
}
