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

#include "circuit2d.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gates.hpp"
#include "random.hpp"

namespace duqc {

namespace {

int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

Gate zz_phase(double J) {
  Gate g = Gate::Zero();
  const cplx i(0.0, 1.0);
  g(0, 0) = g(3, 3) = std::exp(-i * J);
  g(1, 1) = g(2, 2) = std::exp(i * J);
  return g;
}

// Layer index at which the default word would reach the same light cone.
int effective_time(const Circuit2D &c) {
  int d = 0;
  bool last_dual = false;
  for (const Layer2D &l : c.layers) {
    last_dual = role_is_dual(l.role);
    if (last_dual) ++d;
  }
  if (d == 0) return 0;
  return 2 * d - (last_dual ? 1 : 0);
}

void apply_phase(Statevector &s, const std::function<double(const std::vector<int> &)> &energy) {
  const int n = s.num_qubits();
  std::vector<int> z(n);
  auto &amp = s.amplitudes();
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    for (int q = 0; q < n; ++q) z[q] = ((idx >> s.bit_of(q)) & 1) ? -1 : 1;
    amp[idx] *= std::exp(cplx(0.0, -energy(z)));
  }
}

std::vector<std::pair<int, Mat2>> correlation_targets(const Lattice2D &lat,
                                                      const CorrelationQuery &q) {
  Site2 a = lat.wrap(q.site);
  Site2 b = q.kind == CorrKind::C1 ? lat.wrap({a.j, a.k + q.r}) : lat.wrap({a.j + q.r, a.k});
  if (a == b) return {{lat.qubit(a), q.oa * q.ob}};
  return {{lat.qubit(a), q.oa}, {lat.qubit(b), q.ob}};
}

}  // namespace

int Lattice2D::qubit(int j, int k) const {
  return (mod1(j, rows) - 1) * cols + (mod1(k, cols) - 1);
}

Site2 Lattice2D::wrap(const Site2 &s) const { return {mod1(s.j, rows), mod1(s.k, cols)}; }

bool Lattice2D::is_masked(const Site2 &a, const Site2 &b) const {
  Site2 x = wrap(a), y = wrap(b);
  if (x.j != y.j) return false;
  if (mod1(x.k + 1, cols) == y.k && masked.count({x.j, x.k})) return true;
  if (mod1(y.k + 1, cols) == x.k && masked.count({y.j, y.k})) return true;
  return false;
}

Lattice2D make_lattice(int rows, int cols) {
  if (rows < 2 || cols < 2 || rows % 2 || cols % 2) {
    throw Error(Status::InvalidArgument, "lattice sides must be even and >= 2");
  }
  Lattice2D lat;
  lat.rows = rows;
  lat.cols = cols;
  return lat;
}

void apply_honeycomb_mask(Lattice2D &lat) {
  for (int j = 1; j <= lat.rows; ++j)
    for (int k = 1; k <= lat.cols; ++k)
      if ((j + k) % 2) lat.masked.insert({j, k});
}

const char *role_name(Role2D r) {
  switch (r) {
    case Role2D::U1:
      return "U1";
    case Role2D::U2:
      return "U2";
    case Role2D::U3:
      return "U3";
    case Role2D::U4:
      return "U4";
  }
  return "U1";
}

bool role_is_dual(Role2D r) { return r == Role2D::U1 || r == Role2D::U3; }

int Circuit2D::dual_layers() const {
  int d = 0;
  for (const Layer2D &l : layers) d += role_is_dual(l.role);
  return d;
}

std::vector<std::pair<Site2, Site2>> bonds_2d(const Lattice2D &lat, Role2D role) {
  std::vector<std::pair<Site2, Site2>> out;
  const int R = lat.rows, C = lat.cols;
  switch (role) {
    case Role2D::U1:
      for (int j = 1; j <= R / 2; ++j)
        for (int k = 1; k <= C; ++k) out.push_back({{2 * j, k}, lat.wrap({2 * j + 1, k})});
      break;
    case Role2D::U2:
      for (int j = 1; j <= R; ++j)
        for (int k = 1; k <= C / 2; ++k) out.push_back({{j, 2 * k - 1}, {j, 2 * k}});
      break;
    case Role2D::U3:
      for (int j = 1; j <= R / 2; ++j)
        for (int k = 1; k <= C; ++k) out.push_back({{2 * j - 1, k}, {2 * j, k}});
      break;
    case Role2D::U4:
      for (int j = 1; j <= R; ++j)
        for (int k = 1; k <= C / 2; ++k) out.push_back({{j, 2 * k}, lat.wrap({j, 2 * k + 1})});
      break;
  }
  return out;
}

std::vector<Role2D> default_roles(int t) {
  static const Role2D cycle[4] = {Role2D::U1, Role2D::U2, Role2D::U3, Role2D::U4};
  std::vector<Role2D> out;
  for (int i = 0; i < t; ++i) out.push_back(cycle[i % 4]);
  return out;
}

Circuit2D build_2d_duqc(const Lattice2D &lat, const std::vector<Role2D> &roles,
                        const GateSource2D &du_source, const GateSource2D &u24_source,
                        double tol) {
  Circuit2D c;
  c.lat = lat;
  for (Role2D role : roles) {
    Layer2D layer;
    layer.role = role;
    for (const auto &[a, b] : bonds_2d(lat, role)) {
      Gate g;
      if (role_is_dual(role)) {
        g = du_source(role, a, b);
      } else {
        g = lat.is_masked(a, b) ? Gate::Identity() : u24_source(role, a, b);
      }
      layer.gates.push_back({a, b, g});
    }
    c.layers.push_back(std::move(layer));
  }
  validate_2d(c, tol);
  return c;
}

Circuit2D random_2d_duqc(const Lattice2D &lat, int t, std::uint64_t seed) {
  Rng rng(seed);
  return build_2d_duqc(
      lat, default_roles(t), [&](Role2D, const Site2 &, const Site2 &) {
        return random_dual_unitary(rng);
      },
      [&](Role2D, const Site2 &, const Site2 &) { return random_unitary4(rng); });
}

void validate_2d(const Circuit2D &c, double tol) {
  const Lattice2D &lat = c.lat;
  make_lattice(lat.rows, lat.cols);
  // Dual layers must alternate U1, U3, U1, ... starting from U1.
  Role2D expect = Role2D::U1;
  for (std::size_t i = 0; i < c.layers.size(); ++i) {
    const Layer2D &layer = c.layers[i];
    const std::string where = "layer " + std::to_string(i + 1) + " (" +
                              role_name(layer.role) + ")";
    if (role_is_dual(layer.role)) {
      if (layer.role != expect) {
        throw Error(Status::InvalidArgument, where + " breaks the U1/U3 alternation");
      }
      expect = expect == Role2D::U1 ? Role2D::U3 : Role2D::U1;
    }
    auto bonds = bonds_2d(lat, layer.role);
    if (layer.gates.size() != bonds.size()) {
      throw Error(Status::InvalidArgument, where + " does not cover its bonds");
    }
    std::vector<char> used(lat.num_qubits(), 0);
    for (const PlacedGate2D &pg : layer.gates) {
      Site2 a = lat.wrap(pg.from), b = lat.wrap(pg.to);
      bool ok = std::any_of(bonds.begin(), bonds.end(), [&](const auto &bd) {
        return bd.first == a && bd.second == b;
      });
      if (!ok) throw Error(Status::InvalidArgument, where + " has a gate off its bonds");
      int qa = lat.qubit(a), qb = lat.qubit(b);
      if (used[qa] || used[qb]) throw Error(Status::InvalidArgument, where + " overlaps");
      used[qa] = used[qb] = 1;
      if (!pg.g.allFinite() || !is_unitary(pg.g, tol)) {
        throw Error(Status::InvalidArgument, where + " has a non-unitary gate");
      }
      if (role_is_dual(layer.role) && !is_dual_unitary(pg.g, tol)) {
        throw Error(Status::NotDualUnitary,
                    where + " gate on (" + std::to_string(a.j) + "," + std::to_string(a.k) +
                        ") is not dual-unitary");
      }
      if (!role_is_dual(layer.role) && lat.is_masked(a, b) &&
          (pg.g - Gate::Identity()).cwiseAbs().maxCoeff() > tol) {
        throw Error(Status::InvalidArgument, where + " acts on a masked bond");
      }
    }
  }
}

Schedule to_schedule_2d(const Circuit2D &c) {
  Schedule sched;
  for (const Layer2D &layer : c.layers) {
    Layer l;
    l.role = role_name(layer.role);
    for (const PlacedGate2D &pg : layer.gates)
      l.gates.push_back({c.lat.qubit(pg.from), c.lat.qubit(pg.to), pg.g});
    sched.push_back(std::move(l));
  }
  return sched;
}

RowsState solvable_rows_state(const Lattice2D &lat, const SolvableTensor &A, double tol) {
  require_solvable(A, tol);
  make_lattice(lat.rows, lat.cols);
  RowsState s;
  s.lat = lat;
  s.chain.tensor = A;
  s.chain.num_cells = lat.rows / 2;
  return s;
}

std::vector<cplx> rows_statevector(const RowsState &s, int cap) {
  const Lattice2D &lat = s.lat;
  const int n = lat.num_qubits();
  if (n > cap) {
    throw Error(Status::CapExceeded, "2D state of " + std::to_string(n) +
                                         " qubits exceeds cap " + std::to_string(cap));
  }
  std::vector<cplx> chain = to_statevector(s.chain, lat.rows);
  std::vector<cplx> amp(std::size_t(1) << n);
  for (std::size_t idx = 0; idx < amp.size(); ++idx) {
    cplx v = 1.0;
    for (int k = 1; k <= lat.cols && v != cplx(0); ++k) {
      std::size_t c = 0;
      for (int j = 1; j <= lat.rows; ++j)
        if ((idx >> lat.qubit(j, k)) & 1) c |= std::size_t(1) << (j - 1);
      v *= chain[c];
    }
    amp[idx] = v;
  }
  return amp;
}

Statevector evolve_oracle_2d(const Circuit2D &c, const RowsState &init, int cap) {
  if (c.lat.rows != init.lat.rows || c.lat.cols != init.lat.cols) {
    throw Error(Status::InvalidArgument, "circuit and state lattices differ");
  }
  Statevector s(c.lat.num_qubits(), rows_statevector(init, cap), cap);
  evolve(s, to_schedule_2d(c));
  return s;
}

cplx BlockObservable::normalized_trace() const {
  cplx v = 1.0;
  for (const Mat2 &f : factors) v *= 0.5 * f.trace();
  return v;
}

std::vector<std::pair<int, Mat2>> block_targets(const Lattice2D &lat,
                                                const BlockObservable &obs) {
  if (obs.l < 1 || static_cast<int>(obs.factors.size()) != obs.l * obs.l) {
    throw Error(Status::InvalidArgument, "block observable needs l*l factors");
  }
  if (obs.l > lat.rows || obs.l > lat.cols) {
    throw Error(Status::InvalidArgument, "block observable larger than the lattice");
  }
  std::vector<std::pair<int, Mat2>> out;
  for (int a = 0; a < obs.l; ++a)
    for (int b = 0; b < obs.l; ++b)
      out.emplace_back(lat.qubit(obs.origin.j + a, obs.origin.k + b), obs.factors[a * obs.l + b]);
  return out;
}

Regime classify_regime_2d(int rows, int t, int l, double delta) {
  if (t < l + 1) return Regime::PreCone;
  int reach = static_cast<int>(std::floor((1.0 - delta) * rows));
  if (t <= reach - 1 - l) return Regime::Early;
  return Regime::Late;
}

cplx expectation_oracle_2d(const Circuit2D &c, const RowsState &init,
                           const std::vector<std::pair<int, Mat2>> &targets, int cap) {
  Statevector s = evolve_oracle_2d(c, init, cap);
  return expectation_product(s, targets);
}

cplx expectation_cone_2d(const Circuit2D &c, const RowsState &init,
                         const std::vector<std::pair<int, Mat2>> &targets, int cap) {
  const Lattice2D &lat = c.lat;
  const int n = lat.num_qubits();
  std::vector<ConeLayer> layers;
  for (const Layer2D &layer : c.layers) {
    ConeLayer cl;
    for (const PlacedGate2D &pg : layer.gates)
      cl.push_back({lat.qubit(pg.from), lat.qubit(pg.to), pg.g,
                    role_is_dual(layer.role) && is_dual_unitary(pg.g)});
    layers.push_back(std::move(cl));
  }
  std::vector<int> tq;
  for (const auto &t : targets) tq.push_back(t.first);
  std::vector<int> live = cone_inputs(n, layers, tq);
  ConeInit all;
  for (int k = 1; k <= lat.cols; ++k) {
    std::vector<int> sites;
    for (int q : live)
      if (q % lat.cols == k - 1) sites.push_back(q / lat.cols);
    ConeInit ci = chain_cone_init(init.chain, sites, [&](int s) { return lat.qubit(s + 1, k); });
    all.epr_pairs.insert(all.epr_pairs.end(), ci.epr_pairs.begin(), ci.epr_pairs.end());
    all.pair_states.insert(all.pair_states.end(), ci.pair_states.begin(), ci.pair_states.end());
    all.blocks.insert(all.blocks.end(), ci.blocks.begin(), ci.blocks.end());
  }
  return cone_expectation(n, all, layers, targets, cap).value;
}

FastResult expectation_fast_2d(const Circuit2D &c, const RowsState &init,
                               const BlockObservable &obs, const FastOptions &opt) {
  require_solvable(init.chain.tensor, opt.tol);
  validate_2d(c, opt.tol);
  if (c.lat.rows != init.lat.rows || c.lat.cols != init.lat.cols) {
    throw Error(Status::InvalidArgument, "circuit and state lattices differ");
  }
  auto targets = block_targets(c.lat, obs);
  const int t = effective_time(c);
  FastResult r;
  r.regime = classify_regime_2d(c.lat.rows, t, obs.l, opt.delta);
  if (r.regime == Regime::Late) {
    throw LateTimeSignal("t = " + std::to_string(c.depth()) + " is beyond the early regime");
  }
  const SolvableTensor &A = init.chain.tensor;
  r.budget = error_budget(transfer_spectrum(A), A.chi, c.lat.rows / 2, obs.l, 0, opt.c_const);
  if (r.budget.lambda1_mod > 0) {
    const double l1 = r.budget.lambda1_mod;
    r.budget.t = t;
    r.budget.bound = r.budget.c_const * (c.lat.cols / 2) *
                     (std::pow(l1, double(c.lat.rows - obs.l - t)) +
                      std::pow(l1, double(c.lat.rows / 2)));
  }
  r.budget.t = t;
  if (r.regime == Regime::PreCone) {
    r.value = expectation_cone_2d(c, init, targets, opt.cone_cap);
    r.budget.bound = 0.0;
    r.exact = true;
  } else {
    r.value = obs.normalized_trace();
    r.exact = r.budget.bound == 0.0;
  }
  return r;
}

bool c1_in_regime(const Circuit2D &c, int r) {
  if (((r % c.lat.cols) + c.lat.cols) % c.lat.cols == 0) return false;
  return effective_time(c) <= c.lat.rows - 2;
}

bool c2_in_regime(const Circuit2D &c) { return 4 * c.dual_layers() <= c.lat.rows; }

bool c2_case_allowed(const Circuit2D &c, const Site2 &, int r) {
  const int R = c.lat.rows;
  const int d = c.dual_layers();
  const int rr = ((r % R) + R) % R;
  if (rr == 0) return true;
  std::vector<int> cand = d == 0 ? std::vector<int>{1} : std::vector<int>{2 * d - 1, 2 * d, 2 * d + 1};
  for (int v : cand) {
    if (((v % R) + R) % R == rr || ((-v % R) + R) % R == rr) return true;
  }
  return false;
}

cplx correlation_oracle(const Circuit2D &c, const RowsState &init, const CorrelationQuery &q,
                        int cap) {
  auto targets = correlation_targets(c.lat, q);
  cplx both = expectation_oracle_2d(c, init, targets, cap);
  return both - 0.25 * q.oa.trace() * q.ob.trace();
}

CorrelationResult correlation_c1(const Circuit2D &c, const RowsState &init,
                                 const CorrelationQuery &q, int cap) {
  if (q.kind != CorrKind::C1) throw Error(Status::InvalidArgument, "query is not a C1 query");
  validate_2d(c);
  CorrelationResult res;
  if (init.chain.tensor.chi == 1 && c1_in_regime(c, q.r)) {
    require_solvable(init.chain.tensor);
    res.method = "certified";
    res.certified_zero = true;
    return res;
  }
  res.value = correlation_oracle(c, init, q, cap);
  res.method = "oracle";
  return res;
}

CorrelationResult correlation_c2(const Circuit2D &c, const RowsState &init,
                                 const CorrelationQuery &q, int cap) {
  if (q.kind != CorrKind::C2) throw Error(Status::InvalidArgument, "query is not a C2 query");
  validate_2d(c);
  CorrelationResult res;
  if (init.chain.tensor.chi == 1 && c2_in_regime(c) && !c2_case_allowed(c, q.site, q.r)) {
    require_solvable(init.chain.tensor);
    res.method = "certified";
    res.certified_zero = true;
    return res;
  }
  res.value = correlation_oracle(c, init, q, cap);
  res.method = "oracle";
  return res;
}

Cluster2D cluster_circuit_2d(const Lattice2D &lat) {
  if (lat.rows != lat.cols || lat.rows < 4 || lat.rows % 2) {
    throw Error(Status::InvalidArgument, "cluster circuit needs an even square lattice, side >= 4");
  }
  if (!lat.masked.empty()) throw Error(Status::InvalidArgument, "cluster circuit needs no mask");
  const Gate first = swap_gate() * cz_gate() * kron(hadamard(), Mat2::Identity());
  Cluster2D out;
  out.circuit = build_2d_duqc(
      lat, default_roles(4),
      [&](Role2D role, const Site2 &, const Site2 &) {
        return role == Role2D::U1 ? first : swap_gate();
      },
      [&](Role2D, const Site2 &, const Site2 &) { return cz_gate(); });
  const int R = lat.rows;
  auto p1 = [&](int j) { return j % 2 == 0 ? mod1(j + 1, R) : mod1(j - 1, R); };
  auto p2 = [&](int p) { return p % 2 == 1 ? p + 1 : p - 1; };
  out.vertex_qubit.resize(lat.num_qubits());
  for (int j = 1; j <= R; ++j)
    for (int k = 1; k <= lat.cols; ++k)
      out.vertex_qubit[(j - 1) * lat.cols + (k - 1)] = lat.qubit(p2(p1(j)), k);
  out.adjacency = torus_adjacency(R, lat.cols);
  return out;
}

void check_kicked_ising(const KickedIsing2DParams &p) {
  if (!std::isfinite(p.J) || !std::isfinite(p.Jk) || !std::isfinite(p.h) ||
      !std::isfinite(p.b)) {
    throw Error(Status::InvalidArgument, "kicked Ising parameters must be finite");
  }
  if (p.self_dual && (std::abs(std::abs(p.J) - kPi / 4) > 1e-12 ||
                      std::abs(std::abs(p.b) - kPi / 4) > 1e-12)) {
    throw Error(Status::InvalidArgument, "self-dual point needs |J| = |b| = pi/4");
  }
}

Gate kicked_ising_kernel(const KickedIsing2DParams &p) {
  Gate ising = zz_phase(p.J) * kron(pauli_rot(pauli_z(), -p.h), Mat2::Identity());
  Mat2 kick = pauli_rot(pauli_x(), -p.b);
  return ising * kron(kick, kick) * ising;
}

Circuit2D kicked_ising_2d_floquet(const Lattice2D &lat, const KickedIsing2DParams &p,
                                  int periods) {
  check_kicked_ising(p);
  if (periods < 0) throw Error(Status::InvalidArgument, "periods must be >= 0");
  std::vector<Role2D> roles;
  for (int i = 0; i < periods; ++i) {
    for (Role2D r : {Role2D::U1, Role2D::U4, Role2D::U2, Role2D::U3, Role2D::U4, Role2D::U2})
      roles.push_back(r);
  }
  const Gate ki = kicked_ising_kernel(p), zz = zz_phase(p.Jk);
  return build_2d_duqc(
      lat, roles, [&](Role2D, const Site2 &, const Site2 &) { return ki; },
      [&](Role2D, const Site2 &, const Site2 &) { return zz; });
}

void apply_ising_part(Statevector &s, const Lattice2D &lat, const KickedIsing2DParams &p,
                      IsingPart part) {
  Role2D role = part == IsingPart::I1   ? Role2D::U1
                : part == IsingPart::I2 ? Role2D::U2
                : part == IsingPart::I3 ? Role2D::U3
                                        : Role2D::U4;
  auto bonds = bonds_2d(lat, role);
  apply_phase(s, [&](const std::vector<int> &z) {
    double e = 0.0;
    for (const auto &[a, b] : bonds) {
      int za = z[lat.qubit(a)], zb = z[lat.qubit(b)];
      if (role_is_dual(role)) {
        e += p.J * za * zb + p.h * za;
      } else if (!lat.is_masked(a, b)) {
        e += p.Jk * za * zb;
      }
    }
    return e;
  });
}

void apply_kick(Statevector &s, const Lattice2D &lat, double b) {
  Mat2 kick = pauli_rot(pauli_x(), -b);
  for (int q = 0; q < lat.num_qubits(); ++q) apply_one_qubit(s, kick, q);
}

void apply_kicked_ising_period(Statevector &s, const Lattice2D &lat,
                               const KickedIsing2DParams &p) {
  // H_I summed site by site over the +j and +k neighbours.
  apply_phase(s, [&](const std::vector<int> &z) {
    double e = 0.0;
    for (int j = 1; j <= lat.rows; ++j)
      for (int k = 1; k <= lat.cols; ++k) {
        int zq = z[lat.qubit(j, k)];
        e += p.J * zq * z[lat.qubit(j + 1, k)] + p.h * zq;
        if (!lat.is_masked({j, k}, {j, k + 1})) e += p.Jk * zq * z[lat.qubit(j, k + 1)];
      }
    return e;
  });
  apply_kick(s, lat, p.b);
}

FloquetCheck check_kicked_ising_floquet(const Lattice2D &lat, const KickedIsing2DParams &p,
                                        int periods, int samples, std::uint64_t seed) {
  Circuit2D w = kicked_ising_2d_floquet(lat, p, periods);
  FloquetCheck out;
  out.kernel_residual = dual_unitarity_residual(kicked_ising_kernel(p));
  Rng rng(seed);
  std::normal_distribution<double> gauss;
  const int n = lat.num_qubits();
  for (int sample = 0; sample < samples; ++sample) {
    std::vector<cplx> amp(std::size_t(1) << n);
    for (cplx &a : amp) a = cplx(gauss(rng), gauss(rng));
    Statevector lhs(n, amp, 30);
    lhs.normalize();
    Statevector rhs = lhs;
    for (int i = 0; i < 2 * periods + 1; ++i) apply_kicked_ising_period(lhs, lat, p);
    apply_ising_part(rhs, lat, p, IsingPart::I3);
    apply_ising_part(rhs, lat, p, IsingPart::I4);
    apply_ising_part(rhs, lat, p, IsingPart::I2);
    evolve(rhs, to_schedule_2d(w));
    apply_ising_part(rhs, lat, p, IsingPart::I1);
    apply_kick(rhs, lat, p.b);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      out.max_deviation =
          std::max(out.max_deviation, std::abs(lhs.amplitudes()[i] - rhs.amplitudes()[i]));
  }
  return out;
}

}  // namespace duqc
