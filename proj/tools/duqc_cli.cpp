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

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "duqc/duqc.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitLate = 3;
constexpr int kExitCap = 4;
constexpr int kExitInternal = 1;

struct Failure {
  duqc_status status;
  std::string message;
};

int exit_code(duqc_status s) {
  switch (s) {
    case DUQC_OK:
      return kExitOk;
    case DUQC_LATE_REGIME:
      return kExitLate;
    case DUQC_CAP_EXCEEDED:
      return kExitCap;
    case DUQC_INTERNAL:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

void check(duqc_status s) {
  if (s != DUQC_OK) throw Failure{s, duqc_last_error()};
}

struct CircuitPtr {
  duqc_circuit *p = nullptr;
  ~CircuitPtr() { duqc_circuit_free(p); }
};

struct TensorPtr {
  duqc_tensor *p = nullptr;
  ~TensorPtr() { duqc_tensor_free(p); }
};

std::string take(char *s) {
  std::string out = s ? s : "";
  duqc_string_free(s);
  return out;
}

std::string read_text(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Failure{DUQC_PARSE, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse(const std::string &s) { return json::parse(s); }

int default_cap() {
  if (const char *env = std::getenv("DUQC_ORACLE_CAP")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
      throw Failure{DUQC_INVALID_ARGUMENT, "DUQC_ORACLE_CAP must be a positive integer"};
    }
    return static_cast<int>(v);
  }
  return 0;
}

struct Common {
  std::string out;
  std::string format = "json";
  int cap = 0;
  double tol = 1e-10;
  unsigned long long seed = 0;

  int effective_cap() const { return cap > 0 ? cap : default_cap(); }
};

class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Failure{DUQC_INVALID_ARGUMENT, "cannot write " + path};
    }
  }
  std::ostream &os() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void load_state(const std::string &spec, TensorPtr &t) {
  if (spec.empty() || spec == "epr") return;
  const std::string prefix = "solvable:";
  if (spec.rfind(prefix, 0) != 0) {
    throw Failure{DUQC_INVALID_ARGUMENT, "--state must be epr or solvable:<path>"};
  }
  check(duqc_tensor_from_json(read_text(spec.substr(prefix.size())).c_str(), &t.p));
}

std::string verdict(double c, double bound, double a, double b) {
  if (c - bound >= a) return ">=a";
  if (c + bound <= b) return "<=b";
  return "indeterminate";
}

void emit(Output &out, const Common &cm, const json &j) {
  if (cm.format == "csv") {
    bool first = true;
    std::string head, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) {
        head += ",";
        row += ",";
      }
      first = false;
      head += it.key();
      if (it->is_array() && it->size() == 2 && (*it)[0].is_number()) {
        row += (*it)[0].dump() + " " + (*it)[1].dump();
      } else if (it->is_string()) {
        row += it->get<std::string>();
      } else {
        row += it->dump();
      }
    }
    out.os() << head << "\n" << row << "\n";
  } else {
    out.os() << j.dump(2) << "\n";
  }
}

void add_common(CLI::App *cmd, Common &cm) {
  cmd->add_option("--out", cm.out, "Output path (default stdout)");
  cmd->add_option("--format", cm.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--cap", cm.cap, "Dense oracle qubit cap")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", cm.tol, "Tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cm.seed, "Random seed");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Dual-unitary quantum circuit toolkit"};
  app.require_subcommand(1);
  Common cm;

  // verify-gate
  std::string gate_path;
  auto *verify = app.add_subcommand("verify-gate", "Check unitarity and dual-unitarity of a gate");
  verify->add_option("gate", gate_path, "Gate JSON file")->required();
  add_common(verify, cm);

  // expval
  std::string circuit_path, state_spec = "epr", obs_spec, method = "fast";
  long long qubits = 0;
  int t_analytic = -1;
  double delta = 0.0, c_const = -1.0;
  std::vector<double> decide;
  auto *expval = app.add_subcommand("expval", "Local expectation value");
  expval->add_option("--circuit", circuit_path, "Circuit JSON (1D or 2D)");
  expval->add_option("--qubits", qubits, "Chain length 2N for the circuit-free fast path");
  expval->add_option("--t", t_analytic, "Depth for the circuit-free fast path");
  expval->add_option("--state", state_spec, "epr or solvable:<tensor.json>");
  expval->add_option("--obs", obs_spec, "Observable, e.g. Z@3, ZZ@4,5, P0@2, Z@1:2")->required();
  expval->add_option("--method", method)->check(CLI::IsMember({"fast", "oracle", "both"}));
  expval->add_option("--delta", delta, "Regime margin")->check(CLI::Range(0.0, 1.0));
  expval->add_option("--c-const", c_const, "Error-budget constant (default 2 chi^2)");
  expval->add_option("--decide", decide, "Thresholds a b for the promise decision")
      ->expected(2);
  add_common(expval, cm);

  // cluster
  std::string dim = "1d";
  int size = 0;
  auto *cluster = app.add_subcommand("cluster", "Build a cluster-state circuit and verify it");
  cluster->add_option("--dim", dim)->check(CLI::IsMember({"1d", "2d"}));
  cluster->add_option("--size", size, "1d: qubit count (2m)^2; 2d: lattice side")->required();
  cluster->add_option("--emit-circuit", circuit_path, "Also write the circuit JSON here");
  add_common(cluster, cm);

  // corr
  std::string corr_kind = "C1", site = "1:1", oa = "Z", ob = "Z";
  std::vector<int> rs;
  int rows = 4, cols = 4, corr_t = 2, periods = 0;
  bool kicked = false;
  double ki_J = 0.7853981633974483, ki_Jk = 0.7853981633974483, ki_h = 0.0, ki_b = 0.7853981633974483;
  auto *corr = app.add_subcommand("corr", "Two-point correlations on a 2D circuit");
  corr->add_option("--circuit", circuit_path, "2D circuit JSON (default: random)");
  corr->add_option("--rows", rows);
  corr->add_option("--cols", cols);
  corr->add_option("--t", corr_t, "Depth of the random circuit");
  corr->add_flag("--kicked-ising", kicked, "Use the kicked-Ising Floquet circuit");
  corr->add_option("--periods", periods, "Kicked-Ising periods");
  corr->add_option("--J", ki_J);
  corr->add_option("--Jk", ki_Jk);
  corr->add_option("--field", ki_h, "Longitudinal field h");
  corr->add_option("--kick", ki_b, "Kick strength b");
  corr->add_option("--kind", corr_kind)->check(CLI::IsMember({"C1", "C2"}));
  corr->add_option("--site", site, "j:k");
  corr->add_option("--r", rs, "Separations")->required();
  corr->add_option("--oa", oa);
  corr->add_option("--ob", ob);
  corr->add_option("--state", state_spec);
  add_common(corr, cm);

  // bench
  long long fast_qubits = 1000000;
  int fast_t = 100, oracle_t = 2, repeats = 3;
  std::vector<int> oracle_qubits{8, 10, 12};
  auto *bench = app.add_subcommand("bench", "Time the fast path against the dense oracle");
  bench->add_option("--fast-qubits", fast_qubits);
  bench->add_option("--fast-t", fast_t);
  bench->add_option("--oracle-qubits", oracle_qubits);
  bench->add_option("--oracle-t", oracle_t);
  bench->add_option("--repeats", repeats)->check(CLI::PositiveNumber);
  add_common(bench, cm);

  // sample
  unsigned long long shots = 0;
  int cluster1d = 0, cluster2d = 0;
  auto *sample = app.add_subcommand("sample", "Sample computational-basis outcomes");
  sample->add_option("--circuit", circuit_path);
  sample->add_option("--cluster-1d", cluster1d, "Use the 1D cluster circuit with this m");
  sample->add_option("--cluster-2d", cluster2d, "Use the 2D cluster circuit with this side");
  sample->add_option("--state", state_spec);
  sample->add_option("--shots", shots)->required();
  std::string dump_path;
  sample->add_option("--dump-state", dump_path, "Write the final statevector here");
  add_common(sample, cm);

  // compile-cz
  int cz_a = 1, cz_b = 2;
  auto *cz = app.add_subcommand("compile-cz", "Compile a long-range CZ into SWAP conveyors");
  cz->add_option("--qubits", qubits)->required();
  cz->add_option("--a", cz_a)->required();
  cz->add_option("--b", cz_b)->required();
  cz->add_option("--emit-circuit", circuit_path, "Write the circuit JSON here");
  add_common(cz, cm);

  // kicked-ising
  int ki_samples = 2;
  auto *ki = app.add_subcommand("kicked-ising", "2D self-dual kicked-Ising Floquet circuit");
  ki->add_option("--rows", rows);
  ki->add_option("--cols", cols);
  ki->add_option("--periods", periods);
  ki->add_option("--J", ki_J);
  ki->add_option("--Jk", ki_Jk);
  ki->add_option("--field", ki_h, "Longitudinal field h");
  ki->add_option("--kick", ki_b, "Kick strength b");
  ki->add_option("--samples", ki_samples);
  ki->add_option("--emit-circuit", circuit_path, "Write the circuit JSON here");
  add_common(ki, cm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    Output out(cm.out);
    duqc_options opt;
    duqc_options_default(&opt);
    opt.tol = cm.tol;
    opt.delta = delta;
    opt.c_const = c_const;
    opt.cap = cm.effective_cap();

    if (*verify) {
      double g[32];
      check(duqc_gate_from_json(read_text(gate_path).c_str(), g));
      int u = 0, du = 0;
      double ru = 0, rd = 0;
      check(duqc_gate_check(g, cm.tol, &u, &du, &ru, &rd));
      emit(out, cm, {{"unitary", bool(u)}, {"dual_unitary", bool(du)},
                     {"unitary_residual", ru}, {"dual_residual", rd}});
      return u && du ? kExitOk : kExitInternal;
    }

    if (*expval) {
      TensorPtr init;
      load_state(state_spec, init);
      char *res = nullptr;
      duqc_status st;
      if (!circuit_path.empty()) {
        CircuitPtr c;
        check(duqc_circuit_from_json(read_text(circuit_path).c_str(), &c.p));
        st = duqc_expval(c.p, init.p, obs_spec.c_str(), method.c_str(), &opt, &res);
      } else {
        if (qubits < 2 || qubits % 2 || t_analytic < 0) {
          throw Failure{DUQC_INVALID_ARGUMENT, "give --circuit, or --qubits (even) and --t"};
        }
        if (method != "fast") {
          throw Failure{DUQC_INVALID_ARGUMENT, "the circuit-free path is fast-only"};
        }
        st = duqc_expval_fast_analytic(qubits / 2, t_analytic, init.p, obs_spec.c_str(), &opt,
                                       &res);
      }
      if (st != DUQC_OK && st != DUQC_LATE_REGIME) check(st);
      json j = parse(take(res));
      if (!decide.empty() && j.contains("value")) {
        if (!(decide[0] > decide[1])) throw Failure{DUQC_INVALID_ARGUMENT, "--decide needs a > b"};
        double bound = j.value("bound", 0.0);
        j["decision"] = {{"a", decide[0]}, {"b", decide[1]},
                         {"verdict", verdict(j["value"][0].get<double>(), bound, decide[0], decide[1])}};
      }
      emit(out, cm, j);
      if (st == DUQC_LATE_REGIME) return kExitLate;
      if (j.contains("pass") && !j["pass"].get<bool>()) return kExitInternal;
      return kExitOk;
    }

    if (*cluster) {
      CircuitPtr c;
      if (dim == "1d") {
        int m = 1;
        while ((2 * m) * (2 * m) < size) ++m;
        if ((2 * m) * (2 * m) != size) {
          throw Failure{DUQC_INVALID_ARGUMENT, "1d cluster size must be (2m)^2 qubits"};
        }
        check(duqc_circuit_cluster_1d(m, &c.p));
      } else {
        check(duqc_circuit_cluster_2d(size, &c.p));
      }
      if (!circuit_path.empty()) {
        char *js = nullptr;
        check(duqc_circuit_to_json(c.p, &js));
        std::ofstream(circuit_path) << take(js) << "\n";
      }
      char *res = nullptr;
      check(duqc_cluster_verify(c.p, cm.tol, &res));
      json j = parse(take(res));
      emit(out, cm, j);
      return j["pass"].get<bool>() ? kExitOk : kExitInternal;
    }

    if (*corr) {
      TensorPtr init;
      load_state(state_spec, init);
      CircuitPtr c;
      if (!circuit_path.empty()) {
        check(duqc_circuit_from_json(read_text(circuit_path).c_str(), &c.p));
      } else if (kicked) {
        check(duqc_circuit_kicked_ising_2d(rows, cols, ki_J, ki_Jk, ki_h, ki_b, 1, periods, &c.p));
      } else {
        check(duqc_circuit_random_2d(rows, cols, corr_t, cm.seed, 0, &c.p));
      }
      auto colon = site.find(':');
      if (colon == std::string::npos) throw Failure{DUQC_PARSE, "--site must read j:k"};
      int sj = std::stoi(site.substr(0, colon)), sk = std::stoi(site.substr(colon + 1));
      const int kind = corr_kind == "C1" ? 1 : 2;
      json rows_out = json::array();
      for (int r : rs) {
        char *res = nullptr;
        check(duqc_correlation(c.p, init.p, kind, sj, sk, r, oa.c_str(), ob.c_str(), opt.cap, &res));
        rows_out.push_back(parse(take(res)));
      }
      if (cm.format == "csv") {
        out.os() << "direction,i,j,r,t,re,im,method,certified_zero\n";
        for (const json &row : rows_out) {
          out.os() << row["direction"].get<std::string>() << "," << row["j"] << "," << row["k"]
                   << "," << row["r"] << "," << row["t"] << "," << row["value"][0] << ","
                   << row["value"][1] << "," << row["method"].get<std::string>() << ","
                   << (row["certified_zero"].get<bool>() ? "true" : "false") << "\n";
        }
      } else {
        out.os() << rows_out.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*bench) {
      using clock = std::chrono::steady_clock;
      json points = json::array();
      for (int rep = 0; rep < repeats; ++rep) {
        auto t0 = clock::now();
        char *res = nullptr;
        check(duqc_expval_fast_analytic(fast_qubits / 2, fast_t, nullptr, "ZZ@1,2", &opt, &res));
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        json j = parse(take(res));
        points.push_back({{"path", "fast"}, {"qubits", fast_qubits}, {"t", fast_t},
                          {"seconds", secs}, {"value", j["value"][0]}});
      }
      for (int q : oracle_qubits) {
        for (int rep = 0; rep < repeats; ++rep) {
          CircuitPtr c;
          check(duqc_circuit_random_1d(q / 2, oracle_t, cm.seed + rep, 0, &c.p));
          auto t0 = clock::now();
          char *res = nullptr;
          check(duqc_expval(c.p, nullptr, "ZZ@1,2", "oracle", &opt, &res));
          double secs = std::chrono::duration<double>(clock::now() - t0).count();
          json j = parse(take(res));
          points.push_back({{"path", "oracle"}, {"qubits", q}, {"t", oracle_t},
                            {"seconds", secs}, {"value", j["value"][0]}});
        }
      }
      if (cm.format == "csv") {
        out.os() << "path,qubits,t,seconds,value\n";
        for (const json &p : points)
          out.os() << p["path"].get<std::string>() << "," << p["qubits"] << "," << p["t"] << ","
                   << p["seconds"] << "," << p["value"] << "\n";
      } else {
        out.os() << points.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (*sample) {
      TensorPtr init;
      load_state(state_spec, init);
      CircuitPtr c;
      if (!circuit_path.empty()) {
        check(duqc_circuit_from_json(read_text(circuit_path).c_str(), &c.p));
      } else if (cluster1d > 0) {
        check(duqc_circuit_cluster_1d(cluster1d, &c.p));
      } else if (cluster2d > 0) {
        check(duqc_circuit_cluster_2d(cluster2d, &c.p));
      } else {
        throw Failure{DUQC_INVALID_ARGUMENT, "give --circuit, --cluster-1d or --cluster-2d"};
      }
      int n = 0;
      check(duqc_circuit_info(c.p, nullptr, &n, nullptr));
      std::vector<std::uint64_t> words(shots);
      check(duqc_sample(c.p, init.p, shots, cm.seed, opt.cap, words.data()));
      if (!dump_path.empty()) check(duqc_dump_state(c.p, init.p, opt.cap, dump_path.c_str()));
      for (std::uint64_t w : words) {
        std::string bits(n, '0');
        for (int q = 0; q < n; ++q)
          if ((w >> q) & 1) bits[q] = '1';
        out.os() << bits << "\n";
      }
      return kExitOk;
    }

    if (*cz) {
      if (qubits < 2 || qubits % 2) throw Failure{DUQC_INVALID_ARGUMENT, "--qubits must be even"};
      CircuitPtr c;
      check(duqc_circuit_compile_cz(static_cast<int>(qubits / 2), cz_a, cz_b, &c.p));
      int depth = 0;
      check(duqc_circuit_info(c.p, nullptr, nullptr, &depth));
      json j = {{"qubits", qubits}, {"a", cz_a}, {"b", cz_b}, {"layers", depth}};
      if (qubits <= 12) {
        double dev = 0;
        check(duqc_cz_deviation(c.p, cz_a, cz_b, &dev));
        j["max_deviation"] = dev;
        j["pass"] = dev <= cm.tol;
      }
      if (!circuit_path.empty()) {
        char *js = nullptr;
        check(duqc_circuit_to_json(c.p, &js));
        std::ofstream(circuit_path) << take(js) << "\n";
      }
      emit(out, cm, j);
      return kExitOk;
    }

    if (*ki) {
      CircuitPtr c;
      check(duqc_circuit_kicked_ising_2d(rows, cols, ki_J, ki_Jk, ki_h, ki_b, 1, periods, &c.p));
      if (!circuit_path.empty()) {
        char *js = nullptr;
        check(duqc_circuit_to_json(c.p, &js));
        std::ofstream(circuit_path) << take(js) << "\n";
      }
      char *res = nullptr;
      check(duqc_kicked_ising_check(rows, cols, ki_J, ki_Jk, ki_h, ki_b, periods, ki_samples,
                                    cm.seed, &res));
      json j = parse(take(res));
      j["pass"] = j["max_deviation"].get<double>() <= std::max(cm.tol, 1e-8) &&
                  j["kernel_dual_unitary"].get<bool>();
      emit(out, cm, j);
      return j["pass"].get<bool>() ? kExitOk : kExitInternal;
    }
  } catch (const Failure &f) {
    std::cerr << "error (" << duqc_status_name(f.status) << "): " << f.message << "\n";
    return exit_code(f.status);
  } catch (const json::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
