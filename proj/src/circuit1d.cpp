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

#include "circuit1d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gates.hpp"

namespace duqc {

namespace {

int wrap_site(int s, int n) { return ((s - 1) % n + n) % n + 1; }

const BondGate *find_bond(const std::vector<BondGate> &layer, int bond) {
  for (const BondGate &bg : layer)
    if (bg.bond == bond) return &bg;
  return nullptr;
}

void require_periodic_match(const Circuit1D &c, const SolvableState &init) {
  if (c.num_cells != init.num_cells) {
    throw Error(Status::InvalidArgument, "circuit and state sizes differ");
  }
}

// Label tracking for SWAP conveyors: at[p] is the label sitting on site p.
struct Conveyor {
  int N;
  std::vector<int> at, pos;

  explicit Conveyor(int n_cells) : N(n_cells), at(2 * n_cells + 1), pos(2 * n_cells + 1) {
    for (int s = 1; s <= 2 * N; ++s) at[s] = pos[s] = s;
  }
  void step(int tau) {
    for (int bond : layer_bonds(N, tau, Boundary::Periodic)) {
      auto [a, b] = bond_sites(N, bond);
      std::swap(at[a], at[b]);
      pos[at[a]] = a;
      pos[at[b]] = b;
    }
  }
};

std::vector<BondGate> swap_layer(int N, int tau) {
  std::vector<BondGate> layer;
  for (int bond : layer_bonds(N, tau, Boundary::Periodic)) layer.push_back({bond, swap_gate()});
  return layer;
}

}  // namespace

std::vector<int> layer_bonds(int N, int tau, Boundary boundary) {
  std::vector<int> out;
  if (tau % 2 == 1) {
    const int last = boundary == Boundary::Periodic ? N : N - 1;
    for (int i = 1; i <= last; ++i) out.push_back(2 * i);
  } else {
    for (int i = 1; i <= N; ++i) out.push_back(2 * i - 1);
  }
  return out;
}

std::pair<int, int> bond_sites(int N, int bond) {
  return {bond, bond == 2 * N ? 1 : bond + 1};
}

Circuit1D build_brickwork(int N, int t, const GateSource &source, Boundary boundary,
                          double tol) {
  if (N < 1) throw Error(Status::InvalidArgument, "N must be >= 1");
  if (t < 0) throw Error(Status::InvalidArgument, "t must be >= 0");
  Circuit1D c;
  c.num_cells = N;
  c.boundary = boundary;
  for (int tau = 1; tau <= t; ++tau) {
    std::vector<BondGate> layer;
    for (int bond : layer_bonds(N, tau, boundary)) layer.push_back({bond, source(tau, bond)});
    c.layers.push_back(std::move(layer));
  }
  validate(c, tol);
  return c;
}

Circuit1D random_brickwork(int N, int t, std::uint64_t seed, Boundary boundary) {
  Rng rng(seed);
  return build_brickwork(
      N, t, [&](int, int) { return random_dual_unitary(rng); }, boundary);
}

void validate(const Circuit1D &c, double tol) {
  const int N = c.num_cells;
  if (N < 1) throw Error(Status::InvalidArgument, "N must be >= 1");
  for (int tau = 1; tau <= c.depth(); ++tau) {
    const auto &layer = c.layers[tau - 1];
    std::vector<int> expect = layer_bonds(N, tau, c.boundary);
    std::set<int> seen;
    for (const BondGate &bg : layer) {
      const std::string where =
          "layer " + std::to_string(tau) + ", bond " + std::to_string(bg.bond);
      if (std::find(expect.begin(), expect.end(), bg.bond) == expect.end()) {
        throw Error(Status::InvalidArgument, where + " violates the brickwork parity");
      }
      if (!seen.insert(bg.bond).second) {
        throw Error(Status::InvalidArgument, where + " is occupied twice");
      }
      if (!bg.g.allFinite()) throw Error(Status::InvalidArgument, where + " is not finite");
      if (!is_dual_unitary(bg.g, tol)) {
        throw Error(Status::NotDualUnitary,
                    where + " is not dual-unitary (residual " +
                        std::to_string(dual_unitarity_residual(bg.g)) + ")");
      }
    }
    if (seen.size() != expect.size()) {
      throw Error(Status::InvalidArgument, "layer " + std::to_string(tau) + " is incomplete");
    }
  }
}

Schedule to_schedule(const Circuit1D &c) {
  Schedule sched;
  for (int tau = 1; tau <= c.depth(); ++tau) {
    Layer l;
    l.role = tau % 2 ? "odd" : "even";
    for (const BondGate &bg : c.layers[tau - 1]) {
      auto [a, b] = bond_sites(c.num_cells, bg.bond);
      l.gates.push_back({a - 1, b - 1, bg.g});
    }
    sched.push_back(std::move(l));
  }
  return sched;
}

cplx LocalObservable::normalized_trace() const {
  cplx v = 1.0;
  for (const Mat2 &f : factors) v *= 0.5 * f.trace();
  return v;
}

std::vector<std::pair<int, Mat2>> observable_targets(const LocalObservable &obs, int n,
                                                     bool periodic) {
  const int l = obs.length();
  if (l < 1) throw Error(Status::InvalidArgument, "observable needs at least one factor");
  if (l > n) throw Error(Status::InvalidArgument, "observable longer than the chain");
  std::vector<std::pair<int, Mat2>> out;
  for (int i = 0; i < l; ++i) {
    int s = obs.start_site + i;
    if (periodic) {
      s = wrap_site(s, n);
    } else if (s < 1 || s > n) {
      throw Error(Status::InvalidArgument, "observable leaves the open chain");
    }
    if (!obs.factors[i].allFinite()) {
      throw Error(Status::InvalidArgument, "observable factor is not finite");
    }
    out.emplace_back(s - 1, obs.factors[i]);
  }
  return out;
}

const char *regime_name(Regime r) {
  switch (r) {
    case Regime::Early:
      return "early";
    case Regime::PreCone:
      return "pre-cone";
    case Regime::Late:
      return "late";
  }
  return "late";
}

Regime classify_regime_1d(long long N, int t, int l, double delta) {
  if (2LL * t < l + 2) return Regime::PreCone;
  long long reach = static_cast<long long>(std::floor((1.0 - delta) * double(N)));
  if (2LL * t <= 2 * reach - l) return Regime::Early;
  return Regime::Late;
}

ErrorBudget error_budget(const TransferSpectrum &spec, int chi, long long N, int l, int t,
                         double c) {
  ErrorBudget b;
  b.N = N;
  b.l = l;
  b.t = t;
  b.c_const = c < 0 ? 2.0 * chi * chi : c;
  if (spec.eigenvalues.size() > 1 && !spec.unique_max) {
    throw Error(Status::NotSolvable, "transfer matrix has no unique leading eigenvalue");
  }
  b.lambda1_mod = spec.eigenvalues.size() > 1 ? spec.lambda1_mod() : 0.0;
  const double l1 = b.lambda1_mod;
  b.bound = b.c_const * (std::pow(l1, double(2 * N - l - 2LL * t)) + std::pow(l1, double(N)));
  return b;
}

ConeInit chain_cone_init(const SolvableState &s, const std::vector<int> &live,
                         const std::function<int(int)> &qubit_of) {
  const int N = s.num_cells;
  std::set<int> cells;
  for (int site : live) cells.insert(site / 2);
  ConeInit init;
  if (cells.empty()) return init;
  const SolvableTensor &A = s.tensor;
  if (A.chi == 1) {
    const bool epr = s.is_epr();
    MatX pair(4, 4);
    VecX psi(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) psi(i + 2 * j) = A.at(i, j)(0, 0);
    psi.normalize();
    pair = psi * psi.adjoint();
    for (int cell : cells) {
      init.epr_pairs.emplace_back(qubit_of(2 * cell), qubit_of(2 * cell + 1));
      init.pair_states.push_back(epr ? MatX() : pair);
    }
    return init;
  }
  std::vector<int> cv(cells.begin(), cells.end());
  int first = cv.front(), count = cv.back() - cv.front() + 1;
  if (s.boundary == BoundaryKind::PeriodicTrace) {
    int best_gap = cv.front() + N - cv.back(), best_start = cv.front();
    for (std::size_t i = 0; i + 1 < cv.size(); ++i) {
      int gap = cv[i + 1] - cv[i];
      if (gap > best_gap) {
        best_gap = gap;
        best_start = cv[i + 1];
      }
    }
    first = best_start;
    count = N - best_gap + 1;
  }
  InitBlock blk;
  blk.rho = reduced_density_matrix(s, first, count);
  for (int q = 0; q < 2 * count; ++q) blk.qubits.push_back(qubit_of((2 * first + q) % (2 * N)));
  init.blocks.push_back(std::move(blk));
  return init;
}

std::vector<ConeLayer> to_cone_layers(const Circuit1D &c, double tol) {
  std::vector<ConeLayer> out;
  for (const auto &layer : c.layers) {
    ConeLayer cl;
    for (const BondGate &bg : layer) {
      auto [a, b] = bond_sites(c.num_cells, bg.bond);
      cl.push_back({a - 1, b - 1, bg.g, is_dual_unitary(bg.g, tol)});
    }
    out.push_back(std::move(cl));
  }
  return out;
}

cplx expectation_cone(const Circuit1D &c, const SolvableState &init,
                      const LocalObservable &obs, int cap) {
  require_periodic_match(c, init);
  const int n = c.num_qubits();
  auto targets = observable_targets(obs, n, c.boundary == Boundary::Periodic);
  std::vector<int> tq;
  for (const auto &t : targets) tq.push_back(t.first);
  std::vector<ConeLayer> layers = to_cone_layers(c);
  std::vector<int> live = cone_inputs(n, layers, tq);
  ConeInit ci = chain_cone_init(init, live, [](int s) { return s; });
  return cone_expectation(n, ci, layers, targets, cap).value;
}

FastResult expectation_fast(const Circuit1D &c, const SolvableState &init,
                            const LocalObservable &obs, const FastOptions &opt) {
  require_solvable(init.tensor, opt.tol);
  if (c.boundary != Boundary::Periodic || init.boundary != BoundaryKind::PeriodicTrace) {
    throw Error(Status::InvalidArgument, "the fast path needs periodic boundaries");
  }
  require_periodic_match(c, init);
  validate(c, opt.tol);
  const int l = obs.length();
  observable_targets(obs, c.num_qubits(), true);
  FastResult r;
  r.regime = classify_regime_1d(c.num_cells, c.depth(), l, opt.delta);
  if (r.regime == Regime::Late) {
    throw LateTimeSignal("t = " + std::to_string(c.depth()) + " is beyond the early regime");
  }
  TransferSpectrum sp = transfer_spectrum(init.tensor);
  r.budget = error_budget(sp, init.tensor.chi, c.num_cells, l, c.depth(), opt.c_const);
  if (r.regime == Regime::PreCone) {
    r.value = expectation_cone(c, init, obs, opt.cone_cap);
    r.budget.bound = 0.0;
    r.exact = true;
  } else {
    r.value = obs.normalized_trace();
    r.exact = r.budget.bound == 0.0;
  }
  return r;
}

FastResult expectation_fast_analytic(long long N, int t, const LocalObservable &obs,
                                     const SolvableTensor &A, const FastOptions &opt) {
  require_solvable(A, opt.tol);
  const int l = obs.length();
  if (N < 1 || l < 1 || l > 2 * N) {
    throw Error(Status::InvalidArgument, "observable does not fit the chain");
  }
  FastResult r;
  r.regime = classify_regime_1d(N, t, l, opt.delta);
  if (r.regime == Regime::Late) {
    throw LateTimeSignal("t = " + std::to_string(t) + " is beyond the early regime");
  }
  if (r.regime == Regime::PreCone) {
    throw Error(Status::InvalidArgument, "pre-cone evaluation needs the explicit gates");
  }
  r.budget = error_budget(transfer_spectrum(A), A.chi, N, l, t, opt.c_const);
  r.value = obs.normalized_trace();
  r.exact = r.budget.bound == 0.0;
  return r;
}

Statevector evolve_oracle(const Circuit1D &c, const SolvableState &init, int cap) {
  require_periodic_match(c, init);
  Statevector s(init.num_qubits(), to_statevector(init, cap), cap);
  evolve(s, to_schedule(c));
  return s;
}

cplx expectation_oracle(const Circuit1D &c, const SolvableState &init,
                        const LocalObservable &obs, int cap) {
  auto targets = observable_targets(obs, c.num_qubits(), c.boundary == Boundary::Periodic);
  Statevector s = evolve_oracle(c, init, cap);
  return expectation_product(s, targets);
}

FoldedTransfer folded_transfer(const Circuit1D &c, const SolvableTensor &A, int t,
                               int cell) {
  const int N = c.num_cells;
  if (t < 0 || t > c.depth()) throw Error(Status::InvalidArgument, "t exceeds the depth");
  if (cell < 1 || cell > N) throw Error(Status::InvalidArgument, "cell out of range");
  const int chi = A.chi;
  const int legs = 1 << t;
  const int D = chi * legs;
  if (D > 64) throw Error(Status::CapExceeded, "folded transfer matrix too large");
  std::vector<const Gate *> gates(t + 1, nullptr);
  for (int tau = 1; tau <= t; ++tau) {
    int bond = tau % 2 ? 2 * cell : 2 * cell - 1;
    const BondGate *bg = find_bond(c.layers[tau - 1], bond);
    if (!bg) throw Error(Status::InvalidArgument, "circuit layer is incomplete");
    gates[tau] = &bg->g;
  }
  // T[p](L, R) with p = 2 * (last non-internal top wire) + internal top wire.
  std::array<MatX, 4> T;
  for (MatX &m : T) m = MatX::Zero(D, D);
  for (int alpha = 0; alpha < chi; ++alpha)
    for (int beta = 0; beta < chi; ++beta)
      for (int xb = 0; xb < legs; ++xb)
        for (int yb = 0; yb < legs; ++yb)
          for (int top = 0; top < 2; ++top) {
            cplx v[2];
            for (int w = 0; w < 2; ++w) v[w] = A.at(xb & 1, w)(alpha, beta);
            for (int tau = 1; tau <= t; ++tau) {
              const Gate &g = *gates[tau];
              cplx nv[2] = {0.0, 0.0};
              if (tau % 2) {
                int yin = (yb >> (tau - 1)) & 1;
                int yout = tau < t ? (yb >> tau) & 1 : top;
                for (int w2 = 0; w2 < 2; ++w2)
                  nv[w2] = g(2 * w2 + yout, 2 * 0 + yin) * v[0] +
                           g(2 * w2 + yout, 2 * 1 + yin) * v[1];
              } else {
                int xin = (xb >> (tau - 1)) & 1;
                int xout = tau < t ? (xb >> tau) & 1 : top;
                for (int w2 = 0; w2 < 2; ++w2)
                  nv[w2] = g(2 * xout + w2, 2 * xin + 0) * v[0] +
                           g(2 * xout + w2, 2 * xin + 1) * v[1];
              }
              v[0] = nv[0];
              v[1] = nv[1];
            }
            const int L = alpha * legs + xb, R = beta * legs + yb;
            for (int w = 0; w < 2; ++w) T[2 * top + w](L, R) = v[w];
          }
  if (t == 0) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) T[2 * i + j] = A.at(i, j);
  }
  FoldedTransfer f;
  f.t = t;
  f.matrix = MatX::Zero(D * D, D * D);
  for (const MatX &m : T) {
    for (int a1 = 0; a1 < D; ++a1)
      for (int b1 = 0; b1 < D; ++b1) {
        cplx cc = std::conj(m(a1, b1));
        if (cc == cplx(0)) continue;
        f.matrix.block(a1 * D, b1 * D, D, D) += cc * m;
      }
  }
  f.fixed_vec = VecX::Zero(D * D);
  for (int k = 0; k < D; ++k) f.fixed_vec(k * D + k) = 1.0 / std::sqrt(double(D));
  f.right_residual = (f.matrix * f.fixed_vec - f.fixed_vec).cwiseAbs().maxCoeff();
  f.left_residual =
      (f.fixed_vec.transpose() * f.matrix - f.fixed_vec.transpose()).cwiseAbs().maxCoeff();
  return f;
}

Circuit1D compile_parallel_cz(int N, const std::vector<std::pair<int, int>> &pairs) {
  if (N < 1) throw Error(Status::InvalidArgument, "N must be >= 1");
  const int n = 2 * N;
  std::set<std::pair<int, int>> need;
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      throw Error(Status::InvalidArgument, "CZ target sites out of range");
    }
    if ((a + b) % 2 == 0) {
      throw Error(Status::Unreachable, "sites " + std::to_string(a) + " and " +
                                           std::to_string(b) +
                                           " share a parity and never meet");
    }
    need.insert({std::min(a, b), std::max(a, b)});
  }
  Circuit1D c;
  c.num_cells = N;
  std::set<std::pair<int, int>> done;
  Conveyor conv(N);
  for (int tau = 1; tau <= n; ++tau) {
    std::vector<BondGate> layer = swap_layer(N, tau);
    for (BondGate &bg : layer) {
      auto [a, b] = bond_sites(N, bg.bond);
      std::pair<int, int> key{std::min(conv.at[a], conv.at[b]),
                              std::max(conv.at[a], conv.at[b])};
      if (need.count(key) && !done.count(key)) {
        bg.g = swap_gate() * cz_gate();
        done.insert(key);
      }
    }
    conv.step(tau);
    c.layers.push_back(std::move(layer));
  }
  if (done != need) throw Error(Status::Internal, "conveyor missed a CZ pair");
  for (int s = 1; s <= n; ++s) {
    if (conv.at[s] != s) throw Error(Status::Internal, "conveyor did not return home");
  }
  return c;
}

Circuit1D compile_long_range_cz(int N, int a, int b) {
  return compile_parallel_cz(N, {{a, b}});
}

double simulate_target(const TargetCircuit &target) {
  if (target.n < 1) throw Error(Status::InvalidArgument, "target needs qubits");
  if (target.readout < 1 || target.readout > target.n) {
    throw Error(Status::InvalidArgument, "readout qubit out of range");
  }
  Statevector s(target.n);
  for (const TargetOp &op : target.ops) {
    if (op.kind == TargetOp::Kind::Single) {
      apply_one_qubit(s, op.u, op.q - 1);
    } else {
      apply_two_qubit(s, cz_gate(), op.q - 1, op.q2 - 1);
    }
  }
  Mat2 p0 = Mat2::Zero();
  p0(0, 0) = 1.0;
  return expectation_product(s, {{target.readout - 1, p0}}).real();
}

UniversalEmbedding compile_universal(const TargetCircuit &target, int N) {
  if (target.n < 1 || target.n > N) {
    throw Error(Status::InvalidArgument, "target needs 1 <= n <= N qubits");
  }
  if (target.readout < 1 || target.readout > target.n) {
    throw Error(Status::InvalidArgument, "readout qubit out of range");
  }
  for (const TargetOp &op : target.ops) {
    if (op.q < 1 || op.q > target.n) throw Error(Status::InvalidArgument, "qubit out of range");
    if (op.kind == TargetOp::Kind::CZ) {
      if (op.q2 < 1 || op.q2 > target.n || std::abs(op.q - op.q2) != 1) {
        throw Error(Status::InvalidArgument, "target CZ is not nearest-neighbour");
      }
    } else if (!is_unitary(op.u)) {
      throw Error(Status::InvalidArgument, "target single-qubit gate is not unitary");
    }
  }
  const int n = 2 * N;
  // Label positions before each layer, extended on demand.
  std::vector<std::vector<int>> pos_before{{}};
  Conveyor conv(N);
  auto positions = [&](int tau) -> const std::vector<int> & {
    while (static_cast<int>(pos_before.size()) <= tau) {
      int next = static_cast<int>(pos_before.size());
      if (next > 1) conv.step(next - 1);
      pos_before.push_back(conv.pos);
    }
    return pos_before[tau];
  };
  auto bond_of = [&](int tau, int label) {
    int p = positions(tau)[label];
    for (int bond : layer_bonds(N, tau, Boundary::Periodic)) {
      auto [a, b] = bond_sites(N, bond);
      if (a == p || b == p) return bond;
    }
    throw Error(Status::Internal, "label not covered by a layer");
  };

  // Prologue: the EPR partners separate, then meet again on a shared bond.
  int meet = 0;
  for (int tau = 1; tau <= 2 * n && !meet; ++tau) {
    bool all = true;
    for (int i = 1; i <= N && all; ++i) all = bond_of(tau, 2 * i - 1) == bond_of(tau, 2 * i);
    if (all) meet = tau;
  }
  if (!meet) throw Error(Status::Internal, "EPR partners never meet");

  DualUnitaryParams dp;
  dp.alpha = 1.0;
  dp.u1 = dp.u2 = dp.v2 = hadamard();
  const Gate disentangle = build_dual_unitary(dp);

  UniversalEmbedding emb;
  emb.prologue_layers = meet;
  Circuit1D &c = emb.circuit;
  c.num_cells = N;
  std::vector<std::vector<char>> pristine;
  auto ensure = [&](int tau) {
    while (c.depth() < tau) {
      int next = c.depth() + 1;
      c.layers.push_back(swap_layer(N, next));
      pristine.emplace_back(c.layers.back().size(), 1);
    }
  };
  auto slot = [&](int tau, int bond) -> std::size_t {
    const auto &layer = c.layers[tau - 1];
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (layer[i].bond == bond) return i;
    throw Error(Status::Internal, "missing bond");
  };
  ensure(meet);
  for (std::size_t i = 0; i < c.layers[meet - 1].size(); ++i) {
    c.layers[meet - 1][i].g = disentangle;
    pristine[meet - 1][i] = 0;
  }

  int cur = meet;
  for (const TargetOp &op : target.ops) {
    if (op.kind == TargetOp::Kind::Single) {
      ensure(cur);
      int bond = bond_of(cur, op.q);
      std::size_t i = slot(cur, bond);
      // The label leaves through the other site of the bond.
      bool enters_first = positions(cur)[op.q] == bond;
      Gate post = enters_first ? kron(Mat2::Identity(), op.u) : kron(op.u, Mat2::Identity());
      c.layers[cur - 1][i].g = post * c.layers[cur - 1][i].g;
      pristine[cur - 1][i] = 0;
    } else {
      int tau = cur;
      for (;; ++tau) {
        ensure(tau);
        int bond = bond_of(tau, op.q);
        if (bond == bond_of(tau, op.q2) && pristine[tau - 1][slot(tau, bond)]) break;
        if (tau > cur + 2 * n) throw Error(Status::Internal, "CZ partners never meet");
      }
      std::size_t i = slot(tau, bond_of(tau, op.q));
      c.layers[tau - 1][i].g = swap_gate() * cz_gate();
      pristine[tau - 1][i] = 0;
      cur = tau;
    }
  }
  ensure(cur);
  emb.readout_site = positions(c.depth() + 1)[target.readout];
  validate(c);
  return emb;
}

std::vector<std::vector<int>> torus_adjacency(int rows, int cols) {
  std::vector<std::vector<int>> adj(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::set<int> nb;
      nb.insert(((r + 1) % rows) * cols + c);
      nb.insert(((r + rows - 1) % rows) * cols + c);
      nb.insert(r * cols + (c + 1) % cols);
      nb.insert(r * cols + (c + cols - 1) % cols);
      nb.erase(r * cols + c);
      adj[r * cols + c].assign(nb.begin(), nb.end());
    }
  return adj;
}

Cluster1D cluster_circuit_1d(int m) {
  if (m < 1) throw Error(Status::InvalidArgument, "m must be >= 1");
  const int L = 2 * m, n = L * L, N = n / 2;
  if (n > 1 << 20) throw Error(Status::InvalidArgument, "cluster size too large");
  auto rc = [&](int p) {
    int r = (p - 1) / L;
    int c = (((p - 1) % L - r) % L + L) % L;
    return std::pair<int, int>{r, c};
  };
  std::set<std::pair<int, int>> need;
  for (int x = 1; x <= n; ++x) {
    int y = (x - 1) % L != L - 1 ? (x - 1 + L + 1) % n + 1 : x - (L - 1);
    need.insert({std::min(x, y), std::max(x, y)});
  }
  for (int x = 1; x <= n; ++x) {
    int y = x % n + 1;
    need.erase({std::min(x, y), std::max(x, y)});
  }
  Cluster1D out;
  out.m = m;
  Circuit1D &c = out.circuit;
  c.num_cells = N;
  const Gate first = swap_gate() * cz_gate() * kron(hadamard(), Mat2::Identity());
  std::set<std::pair<int, int>> done;
  Conveyor conv(N);
  const int depth = N - m + 1;
  for (int tau = 1; tau <= depth; ++tau) {
    std::vector<BondGate> layer = swap_layer(N, tau);
    for (BondGate &bg : layer) {
      if (tau == 1) {
        bg.g = first;
        continue;
      }
      auto [a, b] = bond_sites(N, bg.bond);
      std::pair<int, int> key{std::min(conv.at[a], conv.at[b]),
                              std::max(conv.at[a], conv.at[b])};
      if (need.count(key) && !done.count(key)) {
        bg.g = swap_gate() * cz_gate();
        done.insert(key);
      }
    }
    conv.step(tau);
    c.layers.push_back(std::move(layer));
  }
  if (done != need) throw Error(Status::Internal, "cluster circuit missed a CZ rung");
  out.vertex_site.assign(n, 0);
  for (int label = 1; label <= n; ++label) {
    auto [r, cc] = rc(label);
    out.vertex_site[r * L + cc] = conv.pos[label];
  }
  out.adjacency = torus_adjacency(L, L);
  return out;
}

cplx obc_boundary_expectation(const Circuit1D &c, const SolvableState &init,
                              const LocalObservable &obs, int cap) {
  if (c.boundary != Boundary::Open) {
    throw Error(Status::InvalidArgument, "boundary ladder needs an open circuit");
  }
  require_periodic_match(c, init);
  if (init.tensor.chi > 1 && init.boundary != BoundaryKind::Fixed) {
    throw Error(Status::InvalidArgument, "open chains need a fixed-boundary state");
  }
  require_solvable(init.tensor);
  validate(c);
  const int N = c.num_cells, n = 2 * N;
  auto targets = observable_targets(obs, n, false);
  const int lo = obs.start_site, hi = obs.start_site + obs.length() - 1;
  if (!(hi <= N || lo > N)) {
    throw LateTimeSignal("observable straddles the middle of the open chain");
  }
  std::vector<int> tq;
  for (const auto &t : targets) tq.push_back(t.first);
  std::vector<ConeLayer> layers = to_cone_layers(c);
  std::vector<int> live = cone_inputs(n, layers, tq);
  ConeInit ci = chain_cone_init(init, live, [](int s) { return s; });
  return cone_expectation(n, ci, layers, targets, cap).value;
}

}  // namespace duqc
