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

#include "io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gates.hpp"

namespace duqc::io {

namespace {

[[noreturn]] void fail(const std::string &msg) { throw Error(Status::Parse, msg); }

template <typename T>
T get(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    fail(std::string("bad field \"") + key + "\": " + e.what());
  }
}

Mat2 mat2_from_json(const json &j) { return matrix_from_json(j, 2, 2); }

std::vector<Mat2> parse_word(const std::string &word) {
  std::vector<Mat2> out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'I':
        out.push_back(pauli_i());
        break;
      case 'X':
        out.push_back(pauli_x());
        break;
      case 'Y':
        out.push_back(pauli_y());
        break;
      case 'Z':
        out.push_back(pauli_z());
        break;
      case 'P': {
        if (i + 1 >= word.size() || (word[i + 1] != '0' && word[i + 1] != '1')) {
          fail("projector must be P0 or P1 in \"" + word + "\"");
        }
        double s = word[i + 1] == '0' ? 1.0 : -1.0;
        out.push_back(0.5 * (pauli_i() + s * pauli_z()));
        ++i;
        break;
      }
      default:
        fail(std::string("unknown operator '") + word[i] + "' in \"" + word + "\"");
    }
  }
  if (out.empty()) fail("empty operator word");
  return out;
}

int parse_int(const std::string &s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception &) {
    fail("not an integer: \"" + s + "\"");
  }
  if (pos != s.size()) fail("not an integer: \"" + s + "\"");
  return v;
}

Site2 parse_site2(const std::string &s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) fail("2D site must read j:k, got \"" + s + "\"");
  return {parse_int(s.substr(0, colon)), parse_int(s.substr(colon + 1))};
}

Site2 site_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2) fail("site must be [j, k]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Role2D role_from_string(const std::string &s) {
  if (s == "U1") return Role2D::U1;
  if (s == "U2") return Role2D::U2;
  if (s == "U3") return Role2D::U3;
  if (s == "U4") return Role2D::U4;
  fail("unknown layer role \"" + s + "\"");
}

}  // namespace

json parse_text(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json &j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail("complex number must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const MatX &m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

MatX matrix_from_json(const json &j, int rows, int cols) {
  MatX m(rows, cols);
  if (!j.is_array()) fail("matrix must be an array");
  if (static_cast<int>(j.size()) == rows * cols && !(j[0].is_array() && j[0].size() == std::size_t(cols) && j[0][0].is_array())) {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r * cols + c]);
    return m;
  }
  if (static_cast<int>(j.size()) != rows) {
    fail("matrix needs " + std::to_string(rows) + " rows");
  }
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      fail("matrix row needs " + std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json gate_to_json(const Gate &g) { return {{"kind", "matrix"}, {"entries", matrix_to_json(g)}}; }

Gate gate_from_json(const json &j) {
  if (!j.is_object()) fail("gate must be a JSON object");
  const std::string kind = get<std::string>(j, "kind");
  Gate g;
  if (kind == "matrix") {
    g = matrix_from_json(j.at("entries"), 4, 4);
  } else if (kind == "dual_params") {
    DualUnitaryParams p;
    p.phi = j.value("phi", 0.0);
    p.alpha = get<double>(j, "alpha");
    if (j.contains("u1")) p.u1 = mat2_from_json(j["u1"]);
    if (j.contains("u2")) p.u2 = mat2_from_json(j["u2"]);
    if (j.contains("v1")) p.v1 = mat2_from_json(j["v1"]);
    if (j.contains("v2")) p.v2 = mat2_from_json(j["v2"]);
    g = build_dual_unitary(p);
  } else if (kind == "named") {
    const std::string name = get<std::string>(j, "name");
    if (name == "swap") {
      g = swap_gate();
    } else if (name == "cz") {
      g = cz_gate();
    } else if (name == "identity") {
      g = Gate::Identity();
    } else if (name == "swap_cz") {
      g = swap_gate() * cz_gate();
    } else if (name == "xxz") {
      g = named_gate({GateFamily::XxzKernel, get<double>(j, "J"), 0.0});
    } else if (name == "kicked_ising") {
      g = named_gate({GateFamily::KickedIsing, j.value("J", kPi / 4), j.value("h", 0.0)});
    } else {
      fail("unknown named gate \"" + name + "\"");
    }
  } else {
    fail("unknown gate kind \"" + kind + "\"");
  }
  if (!g.allFinite()) fail("gate has non-finite entries");
  return g;
}

json tensor_to_json(const SolvableTensor &A) {
  json blocks;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      blocks[std::to_string(i) + std::to_string(k)] = matrix_to_json(A.at(i, k));
  return {{"chi", A.chi}, {"blocks", blocks}};
}

SolvableTensor tensor_from_json(const json &j) {
  SolvableTensor A;
  A.chi = get<int>(j, "chi");
  if (A.chi < 1) fail("chi must be >= 1");
  const json &b = j.at("blocks");
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      std::string key = std::to_string(i) + std::to_string(k);
      if (!b.contains(key)) fail("tensor misses block " + key);
      A.at(i, k) = matrix_from_json(b[key], A.chi, A.chi);
    }
  return A;
}

json circuit1d_to_json(const Circuit1D &c) {
  json layers = json::array();
  for (std::size_t tau = 0; tau < c.layers.size(); ++tau) {
    json gates = json::array();
    for (const BondGate &bg : c.layers[tau])
      gates.push_back({{"bond", bg.bond}, {"gate", gate_to_json(bg.g)}});
    layers.push_back({{"tau", tau + 1}, {"gates", gates}});
  }
  return {{"qubits", c.num_qubits()},
          {"boundary", c.boundary == Boundary::Periodic ? "periodic" : "open"},
          {"layers", layers}};
}

Circuit1D circuit1d_from_json(const json &j, double tol) {
  Circuit1D c;
  const int qubits = get<int>(j, "qubits");
  if (qubits < 2 || qubits % 2) fail("qubits must be even and >= 2");
  c.num_cells = qubits / 2;
  const std::string b = j.value("boundary", std::string("periodic"));
  if (b == "periodic") {
    c.boundary = Boundary::Periodic;
  } else if (b == "open") {
    c.boundary = Boundary::Open;
  } else {
    fail("boundary must be periodic or open");
  }
  const json &layers = j.at("layers");
  if (!layers.is_array()) fail("layers must be an array");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].value("tau", int(i + 1)) != int(i + 1)) fail("layers must be listed by tau 1, 2, ...");
    std::vector<BondGate> layer;
    for (const json &g : layers[i].at("gates")) layer.push_back({get<int>(g, "bond"), gate_from_json(g.at("gate"))});
    c.layers.push_back(std::move(layer));
  }
  validate(c, tol);
  return c;
}

bool is_circuit2d(const json &j) { return j.is_object() && j.contains("rows"); }

json circuit2d_to_json(const Circuit2D &c) {
  json mask = json::array();
  for (const auto &[jj, k] : c.lat.masked) {
    Site2 to = c.lat.wrap({jj, k + 1});
    mask.push_back({{jj, k}, {to.j, to.k}});
  }
  json layers = json::array();
  for (std::size_t t = 0; t < c.layers.size(); ++t) {
    json gates = json::array();
    for (const PlacedGate2D &pg : c.layers[t].gates)
      gates.push_back({{"bond", {{"from", {pg.from.j, pg.from.k}}, {"to", {pg.to.j, pg.to.k}}}},
                       {"gate", gate_to_json(pg.g)}});
    layers.push_back({{"tau", t + 1}, {"role", role_name(c.layers[t].role)}, {"gates", gates}});
  }
  return {{"qubits", c.lat.num_qubits()}, {"rows", c.lat.rows}, {"cols", c.lat.cols},
          {"boundary", "periodic"},      {"edge_mask", mask},  {"layers", layers}};
}

Circuit2D circuit2d_from_json(const json &j, double tol) {
  Circuit2D c;
  try {
    c.lat = make_lattice(get<int>(j, "rows"), get<int>(j, "cols"));
  } catch (const Error &e) {
    fail(e.what());
  }
  if (j.contains("edge_mask")) {
    for (const json &e : j["edge_mask"]) {
      if (!e.is_array() || e.size() != 2) fail("edge_mask entries are [[j,k],[j,k+1]]");
      Site2 a = c.lat.wrap(site_from_json(e[0])), b = c.lat.wrap(site_from_json(e[1]));
      if (a.j != b.j || c.lat.wrap({a.j, a.k + 1}).k != b.k) {
        fail("edge_mask may only disable k-direction bonds ((j,k),(j,k+1))");
      }
      c.lat.masked.insert({a.j, a.k});
    }
  }
  for (const json &lj : j.at("layers")) {
    Layer2D layer;
    layer.role = role_from_string(get<std::string>(lj, "role"));
    for (const json &g : lj.at("gates")) {
      const json &bond = g.at("bond");
      layer.gates.push_back({c.lat.wrap(site_from_json(bond.at("from"))),
                             c.lat.wrap(site_from_json(bond.at("to"))), gate_from_json(g.at("gate"))});
    }
    c.layers.push_back(std::move(layer));
  }
  validate_2d(c, tol);
  return c;
}

LocalObservable parse_observable_1d(const std::string &spec) {
  LocalObservable obs;
  if (!spec.empty() && spec[0] == '{') {
    json j = parse_text(spec);
    obs.start_site = get<int>(j, "start");
    for (const json &f : j.at("factors")) obs.factors.push_back(mat2_from_json(f));
    if (obs.factors.empty()) fail("observable needs at least one factor");
    return obs;
  }
  auto at = spec.find('@');
  if (at == std::string::npos) fail("observable must read WORD@site[,site...]");
  obs.factors = parse_word(spec.substr(0, at));
  std::vector<int> sites;
  std::stringstream ss(spec.substr(at + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) sites.push_back(parse_int(tok));
  if (sites.empty()) fail("observable needs a site");
  if (sites.size() != 1 && sites.size() != obs.factors.size()) {
    fail("observable lists " + std::to_string(sites.size()) + " sites for " +
         std::to_string(obs.factors.size()) + " factors");
  }
  for (std::size_t i = 1; i < sites.size(); ++i)
    if (sites[i] != sites[0] + int(i)) fail("observable sites must be consecutive");
  obs.start_site = sites[0];
  if (obs.start_site < 1) fail("sites are 1-based");
  return obs;
}

BlockObservable parse_observable_2d(const std::string &spec) {
  BlockObservable obs;
  if (!spec.empty() && spec[0] == '{') {
    json j = parse_text(spec);
    obs.origin = site_from_json(j.at("origin"));
    obs.l = get<int>(j, "l");
    for (const json &f : j.at("factors")) obs.factors.push_back(mat2_from_json(f));
  } else {
    auto at = spec.find('@');
    if (at == std::string::npos) fail("2D observable must read WORD@j:k");
    obs.factors = parse_word(spec.substr(0, at));
    obs.origin = parse_site2(spec.substr(at + 1));
    obs.l = static_cast<int>(std::lround(std::sqrt(double(obs.factors.size()))));
  }
  if (obs.l < 1 || static_cast<std::size_t>(obs.l * obs.l) != obs.factors.size()) {
    fail("2D observable needs l*l factors for an l x l block");
  }
  return obs;
}

json fast_result_to_json(const FastResult &r) {
  return {{"value", complex_to_json(r.value)},
          {"method", "fast"},
          {"bound", r.budget.bound},
          {"regime", regime_name(r.regime)},
          {"lambda1", r.budget.lambda1_mod}};
}

const char *status_name(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::InvalidArgument:
      return "invalid-argument";
    case Status::Parse:
      return "parse";
    case Status::NotDualUnitary:
      return "not-dual-unitary";
    case Status::NotSolvable:
      return "not-solvable";
    case Status::LateRegime:
      return "late-regime";
    case Status::CapExceeded:
      return "cap-exceeded";
    case Status::Unreachable:
      return "unreachable";
    case Status::Internal:
      return "internal";
  }
  return "internal";
}

}  // namespace duqc::io
