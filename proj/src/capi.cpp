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

#include "duqc/duqc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "circuit1d.hpp"
#include "circuit2d.hpp"
#include "gates.hpp"
#include "io.hpp"

using namespace duqc;
using nlohmann::json;

struct duqc_tensor {
  SolvableTensor A;
  BoundaryKind boundary = BoundaryKind::PeriodicTrace;
  int alpha = 0;
  int beta = 0;
};

struct duqc_circuit {
  int dims = 1;
  Circuit1D c1;
  Circuit2D c2;
  bool cluster = false;
  std::vector<int> vertex_qubit;
  std::vector<std::vector<int>> adjacency;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
duqc_status guard(F &&f) {
  try {
    f();
    g_last_error.clear();
    return DUQC_OK;
  } catch (const Error &e) {
    g_last_error = e.what();
    return static_cast<duqc_status>(e.code());
  } catch (const json::exception &e) {
    g_last_error = std::string("JSON: ") + e.what();
    return DUQC_PARSE;
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return DUQC_CAP_EXCEEDED;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return DUQC_INTERNAL;
  }
}

void need(const void *p, const char *what) {
  if (!p) throw Error(Status::InvalidArgument, std::string(what) + " is NULL");
}

char *dup_json(const json &j) {
  std::string s = j.dump();
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Gate gate_in(const double *g) {
  need(g, "gate");
  Gate m;
  for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = cplx(g[2 * i], g[2 * i + 1]);
  return m;
}

void gate_out(const Gate &m, double *out) {
  need(out, "output");
  for (int i = 0; i < 16; ++i) {
    out[2 * i] = m(i / 4, i % 4).real();
    out[2 * i + 1] = m(i / 4, i % 4).imag();
  }
}

Mat2 mat2_in(const double *u) {
  if (!u) return Mat2::Identity();
  Mat2 m;
  for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = cplx(u[2 * i], u[2 * i + 1]);
  return m;
}

SolvableState chain_state(const duqc_tensor *t, int N) {
  SolvableState s;
  s.tensor = t ? t->A : epr_tensor();
  s.num_cells = N;
  if (t) {
    s.boundary = t->boundary;
    s.alpha = t->alpha;
    s.beta = t->beta;
  }
  return s;
}

RowsState rows_state(const duqc_tensor *t, const Lattice2D &lat) {
  if (t && t->boundary != BoundaryKind::PeriodicTrace) {
    throw Error(Status::InvalidArgument, "2D rows need periodic chains");
  }
  return solvable_rows_state(lat, t ? t->A : epr_tensor());
}

int cap_or(int cap, int fallback) { return cap > 0 ? cap : fallback; }

FastOptions fast_options(const duqc_options *opt) {
  FastOptions fo;
  if (opt) {
    fo.delta = opt->delta;
    fo.c_const = opt->c_const;
  }
  return fo;
}

Mat2 single_op(const char *spec) {
  need(spec, "operator");
  LocalObservable o = io::parse_observable_1d(std::string(spec) + "@1");
  if (o.length() != 1) throw Error(Status::Parse, "correlation operators act on one site");
  return o.factors[0];
}

Statevector evolve_any(const duqc_circuit *c, const duqc_tensor *init, int cap) {
  if (c->dims == 1) {
    return evolve_oracle(c->c1, chain_state(init, c->c1.num_cells), cap_or(cap, kDefaultOracleCap));
  }
  return evolve_oracle_2d(c->c2, rows_state(init, c->c2.lat), cap_or(cap, kOracleCap2D));
}

TargetCircuit target_from_json(const json &j) {
  TargetCircuit t;
  t.n = j.at("n").get<int>();
  t.readout = j.value("readout", 1);
  for (const json &op : j.at("ops")) {
    const std::string name = op.at("op").get<std::string>();
    TargetOp o;
    o.q = op.at("q").get<int>();
    if (name == "cz") {
      o.kind = TargetOp::Kind::CZ;
      o.q2 = op.at("q2").get<int>();
    } else if (name == "H") {
      o.u = hadamard();
    } else if (name == "X") {
      o.u = pauli_x();
    } else if (name == "Y") {
      o.u = pauli_y();
    } else if (name == "Z") {
      o.u = pauli_z();
    } else if (name == "S") {
      o.u << 1, 0, 0, cplx(0, 1);
    } else if (name == "T") {
      o.u << 1, 0, 0, std::exp(cplx(0, kPi / 4));
    } else if (name == "u") {
      o.u = io::matrix_from_json(op.at("u"), 2, 2);
    } else {
      throw Error(Status::Parse, "unknown target op \"" + name + "\"");
    }
    t.ops.push_back(o);
  }
  return t;
}

json expval_1d(const duqc_circuit *c, const duqc_tensor *init, const std::string &spec,
               const std::string &method, const duqc_options *opt, duqc_status &status) {
  const Circuit1D &circ = c->c1;
  SolvableState s = chain_state(init, circ.num_cells);
  LocalObservable obs = io::parse_observable_1d(spec);
  const int cap = cap_or(opt ? opt->cap : 0, kDefaultOracleCap);
  const bool open = circ.boundary == Boundary::Open;
  const std::string regime =
      open ? "early" : regime_name(classify_regime_1d(circ.num_cells, circ.depth(), obs.length(),
                                                      opt ? opt->delta : 0.0));
  auto oracle = [&]() { return expectation_oracle(circ, s, obs, cap); };
  auto fast = [&](json &out) {
    if (open) {
      out = {{"value", io::complex_to_json(obc_boundary_expectation(circ, s, obs))},
             {"method", "obc-ladder"}, {"bound", 0.0}, {"regime", regime}};
    } else {
      out = io::fast_result_to_json(expectation_fast(circ, s, obs, fast_options(opt)));
    }
  };
  json out;
  if (method == "oracle") {
    return {{"value", io::complex_to_json(oracle())}, {"method", "oracle"}, {"bound", 0.0},
            {"regime", regime}};
  }
  bool late = false;
  try {
    fast(out);
  } catch (const LateTimeSignal &e) {
    late = true;
    g_last_error = e.what();
    out = {{"method", method == "both" ? "oracle" : "fast"}, {"regime", "late"}, {"claim", false}};
  }
  if (method == "both") {
    cplx ov = oracle();
    if (late) {
      out["value"] = io::complex_to_json(ov);
    } else {
      cplx fv = io::complex_from_json(out["value"]);
      double delta = std::abs(fv - ov);
      double tol = opt ? opt->tol : kDefaultTol;
      out["oracle"] = io::complex_to_json(ov);
      out["delta"] = delta;
      out["tol"] = tol;
      out["pass"] = delta <= tol;
      out["within_bound"] = delta <= tol + out["bound"].get<double>();
      out["method"] = "both";
    }
  } else if (method != "fast") {
    throw Error(Status::InvalidArgument, "method must be fast, oracle or both");
  }
  if (late) status = DUQC_LATE_REGIME;
  return out;
}

json expval_2d(const duqc_circuit *c, const duqc_tensor *init, const std::string &spec,
               const std::string &method, const duqc_options *opt, duqc_status &status) {
  const Circuit2D &circ = c->c2;
  RowsState s = rows_state(init, circ.lat);
  BlockObservable obs = io::parse_observable_2d(spec);
  auto targets = block_targets(circ.lat, obs);
  const int cap = cap_or(opt ? opt->cap : 0, kOracleCap2D);
  auto oracle = [&]() { return expectation_oracle_2d(circ, s, targets, cap); };
  if (method == "oracle") {
    return {{"value", io::complex_to_json(oracle())}, {"method", "oracle"}, {"bound", 0.0}};
  }
  if (method != "fast" && method != "both") {
    throw Error(Status::InvalidArgument, "method must be fast, oracle or both");
  }
  json out;
  bool late = false;
  try {
    out = io::fast_result_to_json(expectation_fast_2d(circ, s, obs, fast_options(opt)));
  } catch (const LateTimeSignal &e) {
    late = true;
    g_last_error = e.what();
    out = {{"method", method == "both" ? "oracle" : "fast"}, {"regime", "late"}, {"claim", false}};
  }
  if (method == "both") {
    cplx ov = oracle();
    if (late) {
      out["value"] = io::complex_to_json(ov);
    } else {
      double delta = std::abs(io::complex_from_json(out["value"]) - ov);
      double tol = opt ? opt->tol : kDefaultTol;
      out["oracle"] = io::complex_to_json(ov);
      out["delta"] = delta;
      out["tol"] = tol;
      out["pass"] = delta <= tol;
      out["within_bound"] = delta <= tol + out["bound"].get<double>();
      out["method"] = "both";
    }
  }
  if (late) status = DUQC_LATE_REGIME;
  return out;
}

}  // namespace

extern "C" {

const char *duqc_last_error(void) { return g_last_error.c_str(); }

const char *duqc_status_name(duqc_status s) { return io::status_name(static_cast<Status>(s)); }

const char *duqc_version(void) { return "0.1.0"; }

void duqc_string_free(char *s) { std::free(s); }

duqc_status duqc_gate_from_json(const char *text, double out[32]) {
  return guard([&] {
    need(text, "json");
    gate_out(io::gate_from_json(io::parse_text(text)), out);
  });
}

duqc_status duqc_gate_check(const double g[32], double tol, int *unitary, int *dual_unitary,
                            double *unitary_residual, double *dual_residual) {
  return guard([&] {
    Gate m = gate_in(g);
    if (!(tol > 0)) throw Error(Status::InvalidArgument, "tol must be positive");
    double ru = unitarity_residual(m), rd = dual_unitarity_residual(m);
    if (unitary) *unitary = ru <= tol;
    if (dual_unitary) *dual_unitary = rd <= tol;
    if (unitary_residual) *unitary_residual = ru;
    if (dual_residual) *dual_residual = rd;
  });
}

duqc_status duqc_gate_dual(const double g[32], double out[32]) {
  return guard([&] { gate_out(dual_of(gate_in(g)), out); });
}

duqc_status duqc_gate_random_dual(uint64_t seed, double out[32]) {
  return guard([&] { gate_out(random_dual_unitary(seed), out); });
}

duqc_status duqc_gate_build_dual(double phi, double alpha, const double u1[8],
                                 const double u2[8], const double v1[8], const double v2[8],
                                 double out[32]) {
  return guard([&] {
    DualUnitaryParams p{phi, alpha, mat2_in(u1), mat2_in(u2), mat2_in(v1), mat2_in(v2)};
    gate_out(build_dual_unitary(p), out);
  });
}

duqc_status duqc_tensor_epr(duqc_tensor **out) {
  return guard([&] {
    need(out, "output");
    *out = new duqc_tensor{epr_tensor()};
  });
}

duqc_status duqc_tensor_random(int chi, uint64_t seed, duqc_tensor **out) {
  return guard([&] {
    need(out, "output");
    if (chi < 1) throw Error(Status::InvalidArgument, "chi must be >= 1");
    *out = new duqc_tensor{random_solvable_tensor(chi, seed)};
  });
}

duqc_status duqc_tensor_from_json(const char *text, duqc_tensor **out) {
  return guard([&] {
    need(text, "json");
    need(out, "output");
    json j = io::parse_text(text);
    auto t = std::make_unique<duqc_tensor>();
    t->A = io::tensor_from_json(j);
    require_solvable(t->A);
    if (j.contains("boundary") && j["boundary"].is_object()) {
      t->boundary = BoundaryKind::Fixed;
      t->alpha = j["boundary"].at("alpha").get<int>();
      t->beta = j["boundary"].at("beta").get<int>();
      if (t->alpha < 0 || t->alpha >= t->A.chi || t->beta < 0 || t->beta >= t->A.chi) {
        throw Error(Status::InvalidArgument, "boundary indices out of range");
      }
    }
    *out = t.release();
  });
}

duqc_status duqc_tensor_set_fixed_boundary(duqc_tensor *t, int alpha, int beta) {
  return guard([&] {
    need(t, "tensor");
    if (alpha < 0 || alpha >= t->A.chi || beta < 0 || beta >= t->A.chi) {
      throw Error(Status::InvalidArgument, "boundary indices out of range");
    }
    t->boundary = BoundaryKind::Fixed;
    t->alpha = alpha;
    t->beta = beta;
  });
}

duqc_status duqc_tensor_to_json(const duqc_tensor *t, char **out_json) {
  return guard([&] {
    need(t, "tensor");
    need(out_json, "output");
    json j = io::tensor_to_json(t->A);
    if (t->boundary == BoundaryKind::Fixed) j["boundary"] = {{"alpha", t->alpha}, {"beta", t->beta}};
    *out_json = dup_json(j);
  });
}

duqc_status duqc_tensor_report(const duqc_tensor *t, double tol, char **out_json) {
  return guard([&] {
    need(t, "tensor");
    need(out_json, "output");
    SolvabilityReport r = check_solvable(t->A, tol);
    TransferSpectrum sp = transfer_spectrum(t->A);
    *out_json = dup_json({{"pass", r.pass},
                          {"residual_row", r.residual_row},
                          {"residual_column", r.residual_column},
                          {"lambda0", sp.lambda0_mod()},
                          {"lambda1", sp.lambda1_mod()},
                          {"unique_max", sp.unique_max}});
  });
}

void duqc_tensor_free(duqc_tensor *t) { delete t; }

duqc_status duqc_circuit_from_json(const char *text, duqc_circuit **out) {
  return guard([&] {
    need(text, "json");
    need(out, "output");
    json j = io::parse_text(text);
    auto c = std::make_unique<duqc_circuit>();
    if (io::is_circuit2d(j)) {
      c->dims = 2;
      c->c2 = io::circuit2d_from_json(j);
    } else {
      c->c1 = io::circuit1d_from_json(j);
    }
    *out = c.release();
  });
}

duqc_status duqc_circuit_random_1d(int num_cells, int t, uint64_t seed, int open,
                                   duqc_circuit **out) {
  return guard([&] {
    need(out, "output");
    if (num_cells < 1 || t < 0) throw Error(Status::InvalidArgument, "need N >= 1 and t >= 0");
    auto c = std::make_unique<duqc_circuit>();
    c->c1 = random_brickwork(num_cells, t, seed, open ? Boundary::Open : Boundary::Periodic);
    *out = c.release();
  });
}

duqc_status duqc_circuit_random_2d(int rows, int cols, int t, uint64_t seed, int honeycomb,
                                   duqc_circuit **out) {
  return guard([&] {
    need(out, "output");
    if (t < 0) throw Error(Status::InvalidArgument, "t must be >= 0");
    Lattice2D lat = make_lattice(rows, cols);
    if (honeycomb) apply_honeycomb_mask(lat);
    auto c = std::make_unique<duqc_circuit>();
    c->dims = 2;
    c->c2 = random_2d_duqc(lat, t, seed);
    *out = c.release();
  });
}

duqc_status duqc_circuit_compile_cz(int num_cells, int a, int b, duqc_circuit **out) {
  return guard([&] {
    need(out, "output");
    auto c = std::make_unique<duqc_circuit>();
    c->c1 = compile_long_range_cz(num_cells, a, b);
    *out = c.release();
  });
}

duqc_status duqc_circuit_compile_universal(const char *target_json, int num_cells,
                                           duqc_circuit **out, int *readout_site,
                                           double *target_value) {
  return guard([&] {
    need(target_json, "target");
    need(out, "output");
    TargetCircuit target = target_from_json(io::parse_text(target_json));
    UniversalEmbedding e = compile_universal(target, num_cells);
    if (readout_site) *readout_site = e.readout_site;
    if (target_value) *target_value = simulate_target(target);
    auto c = std::make_unique<duqc_circuit>();
    c->c1 = std::move(e.circuit);
    *out = c.release();
  });
}

duqc_status duqc_circuit_cluster_1d(int m, duqc_circuit **out) {
  return guard([&] {
    need(out, "output");
    Cluster1D cl = cluster_circuit_1d(m);
    auto c = std::make_unique<duqc_circuit>();
    c->c1 = std::move(cl.circuit);
    c->cluster = true;
    for (int s : cl.vertex_site) c->vertex_qubit.push_back(s - 1);
    c->adjacency = std::move(cl.adjacency);
    *out = c.release();
  });
}

duqc_status duqc_circuit_cluster_2d(int side, duqc_circuit **out) {
  return guard([&] {
    need(out, "output");
    Cluster2D cl = cluster_circuit_2d(make_lattice(side, side));
    auto c = std::make_unique<duqc_circuit>();
    c->dims = 2;
    c->c2 = std::move(cl.circuit);
    c->cluster = true;
    c->vertex_qubit = std::move(cl.vertex_qubit);
    c->adjacency = std::move(cl.adjacency);
    *out = c.release();
  });
}

duqc_status duqc_circuit_kicked_ising_2d(int rows, int cols, double J, double Jk, double h,
                                         double b, int self_dual, int periods,
                                         duqc_circuit **out) {
  return guard([&] {
    need(out, "output");
    KickedIsing2DParams p{J, Jk, h, b, self_dual != 0};
    auto c = std::make_unique<duqc_circuit>();
    c->dims = 2;
    c->c2 = kicked_ising_2d_floquet(make_lattice(rows, cols), p, periods);
    *out = c.release();
  });
}

duqc_status duqc_circuit_to_json(const duqc_circuit *c, char **out_json) {
  return guard([&] {
    need(c, "circuit");
    need(out_json, "output");
    *out_json = dup_json(c->dims == 1 ? io::circuit1d_to_json(c->c1) : io::circuit2d_to_json(c->c2));
  });
}

duqc_status duqc_circuit_info(const duqc_circuit *c, int *dims, int *qubits, int *depth) {
  return guard([&] {
    need(c, "circuit");
    if (dims) *dims = c->dims;
    if (qubits) *qubits = c->dims == 1 ? c->c1.num_qubits() : c->c2.lat.num_qubits();
    if (depth) *depth = c->dims == 1 ? c->c1.depth() : c->c2.depth();
  });
}

void duqc_circuit_free(duqc_circuit *c) { delete c; }

void duqc_options_default(duqc_options *opt) {
  if (!opt) return;
  opt->delta = 0.0;
  opt->c_const = -1.0;
  opt->cap = 0;
  opt->tol = kDefaultTol;
}

duqc_status duqc_expval(const duqc_circuit *c, const duqc_tensor *init, const char *obs,
                        const char *method, const duqc_options *opt, char **out_json) {
  duqc_status late = DUQC_OK;
  duqc_status st = guard([&] {
    need(c, "circuit");
    need(obs, "observable");
    need(out_json, "output");
    const std::string m = method ? method : "fast";
    json out = c->dims == 1 ? expval_1d(c, init, obs, m, opt, late)
                            : expval_2d(c, init, obs, m, opt, late);
    *out_json = dup_json(out);
  });
  if (st == DUQC_OK && late != DUQC_OK) {
    g_last_error = "late regime: no early-time claim";
    return late;
  }
  return st;
}

duqc_status duqc_expval_fast_analytic(long long num_cells, int t, const duqc_tensor *init,
                                      const char *obs, const duqc_options *opt,
                                      char **out_json) {
  bool late = false;
  duqc_status st = guard([&] {
    need(obs, "observable");
    need(out_json, "output");
    LocalObservable o = io::parse_observable_1d(obs);
    try {
      FastResult r = expectation_fast_analytic(num_cells, t, o, init ? init->A : epr_tensor(),
                                               fast_options(opt));
      *out_json = dup_json(io::fast_result_to_json(r));
    } catch (const LateTimeSignal &) {
      late = true;
      *out_json = dup_json({{"method", "fast"}, {"regime", "late"}, {"claim", false}});
    }
  });
  if (st == DUQC_OK && late) {
    g_last_error = "late regime: no early-time claim";
    return DUQC_LATE_REGIME;
  }
  return st;
}

duqc_status duqc_correlation(const duqc_circuit *c, const duqc_tensor *init, int kind, int j,
                             int k, int r, const char *oa, const char *ob, int cap,
                             char **out_json) {
  return guard([&] {
    need(c, "circuit");
    need(out_json, "output");
    if (c->dims != 2) throw Error(Status::InvalidArgument, "correlations need a 2D circuit");
    if (kind != 1 && kind != 2) throw Error(Status::InvalidArgument, "kind must be 1 or 2");
    CorrelationQuery q;
    q.kind = kind == 1 ? CorrKind::C1 : CorrKind::C2;
    q.site = {j, k};
    q.r = r;
    q.oa = single_op(oa);
    q.ob = single_op(ob);
    RowsState s = rows_state(init, c->c2.lat);
    const int cp = cap_or(cap, kOracleCap2D);
    CorrelationResult res =
        kind == 1 ? correlation_c1(c->c2, s, q, cp) : correlation_c2(c->c2, s, q, cp);
    *out_json = dup_json({{"direction", kind == 1 ? "C1" : "C2"},
                          {"j", j},
                          {"k", k},
                          {"r", r},
                          {"t", c->c2.depth()},
                          {"value", io::complex_to_json(res.value)},
                          {"method", res.method},
                          {"certified_zero", res.certified_zero}});
  });
}

duqc_status duqc_cluster_verify(const duqc_circuit *c, double tol, char **out_json) {
  return guard([&] {
    need(c, "circuit");
    need(out_json, "output");
    if (!c->cluster) throw Error(Status::InvalidArgument, "not a cluster circuit");
    Statevector s = evolve_any(c, nullptr, 0);
    StabilizerReport rep = verify_stabilizers(s, c->adjacency, c->vertex_qubit, tol);
    *out_json = dup_json({{"pass", rep.pass},
                          {"worst_deviation", rep.worst_deviation},
                          {"values", rep.values},
                          {"qubits", s.num_qubits()},
                          {"depth", c->dims == 1 ? c->c1.depth() : c->c2.depth()}});
  });
}

duqc_status duqc_sample(const duqc_circuit *c, const duqc_tensor *init, size_t shots,
                        uint64_t seed, int cap, uint64_t *out) {
  return guard([&] {
    need(c, "circuit");
    if (shots > 0) need(out, "output");
    Statevector s = evolve_any(c, init, cap);
    if (s.norm_sq() > 0) s.normalize();
    std::vector<std::uint64_t> w = sample_outcomes(s, shots, seed);
    std::copy(w.begin(), w.end(), out);
  });
}

duqc_status duqc_dump_state(const duqc_circuit *c, const duqc_tensor *init, int cap,
                            const char *path) {
  return guard([&] {
    need(c, "circuit");
    need(path, "path");
    dump_statevector(evolve_any(c, init, cap), path);
  });
}

duqc_status duqc_cz_deviation(const duqc_circuit *c, int a, int b, double *deviation) {
  return guard([&] {
    need(c, "circuit");
    need(deviation, "output");
    if (c->dims != 1) throw Error(Status::InvalidArgument, "CZ check needs a 1D circuit");
    const int n = c->c1.num_qubits();
    if (a < 1 || b < 1 || a > n || b > n || a == b) {
      throw Error(Status::InvalidArgument, "CZ sites out of range");
    }
    MatX U = assemble_unitary(n, to_schedule(c->c1));
    const cplx phase = U(0, 0) / std::abs(U(0, 0));
    double dev = 0.0;
    for (Eigen::Index r = 0; r < U.rows(); ++r)
      for (Eigen::Index col = 0; col < U.cols(); ++col) {
        cplx want = 0.0;
        if (r == col) want = (((r >> (a - 1)) & 1) && ((r >> (b - 1)) & 1)) ? -1.0 : 1.0;
        dev = std::max(dev, std::abs(U(r, col) / phase - want));
      }
    *deviation = dev;
  });
}

duqc_status duqc_kicked_ising_check(int rows, int cols, double J, double Jk, double h,
                                    double b, int periods, int samples, uint64_t seed,
                                    char **out_json) {
  return guard([&] {
    need(out_json, "output");
    KickedIsing2DParams p{J, Jk, h, b, true};
    Lattice2D lat = make_lattice(rows, cols);
    FloquetCheck fc = check_kicked_ising_floquet(lat, p, periods, samples, seed);
    *out_json = dup_json({{"max_deviation", fc.max_deviation},
                          {"kernel_residual", fc.kernel_residual},
                          {"kernel_dual_unitary", is_dual_unitary(kicked_ising_kernel(p))}});
  });
}

}  // extern "C"
