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

#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>

#include "kernel.hpp"

namespace duqc {

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw Error(Status::InvalidArgument, "negative qubit count");
  if (n > cap || n > 30) {
    throw Error(Status::CapExceeded, "dense state of " + std::to_string(n) +
                                         " qubits exceeds the oracle cap of " +
                                         std::to_string(cap));
  }
}

void check_qubit(const Statevector &s, int q) {
  if (q < 0 || q >= s.num_qubits()) {
    throw Error(Status::InvalidArgument, "qubit " + std::to_string(q) + " out of range");
  }
}

}  // namespace

Statevector::Statevector(int n, int cap) : n_(n) {
  check_cap(n, cap);
  amp_.assign(std::size_t(1) << n, cplx(0));
  amp_[0] = 1.0;
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
}

Statevector::Statevector(int n, std::vector<cplx> amps, int cap) : n_(n) {
  check_cap(n, cap);
  if (amps.size() != (std::size_t(1) << n)) {
    throw Error(Status::InvalidArgument, "amplitude vector has the wrong length");
  }
  amp_ = std::move(amps);
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
}

void Statevector::set_site_order(std::vector<int> order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != i || static_cast<int>(sorted.size()) != n_) {
      throw Error(Status::InvalidArgument, "site order is not a bijection");
    }
  }
  order_ = std::move(order);
}

double Statevector::norm_sq() const {
  double s = 0;
  for (const cplx &a : amp_) s += std::norm(a);
  return s;
}

void Statevector::normalize() {
  double nrm = std::sqrt(norm_sq());
  if (!(nrm > 0)) throw Error(Status::InvalidArgument, "zero-norm state");
  for (cplx &a : amp_) a /= nrm;
}

Statevector epr_product_state(int n, const std::vector<std::pair<int, int>> &pairs,
                              int cap) {
  Statevector s(n, cap);
  std::vector<cplx> &amp = s.amplitudes();
  std::fill(amp.begin(), amp.end(), cplx(0));
  const std::size_t np = pairs.size();
  const double w = std::pow(2.0, -0.5 * double(np));
  for (std::size_t bits = 0; bits < (std::size_t(1) << np); ++bits) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < np; ++i) {
      if ((bits >> i) & 1) {
        idx |= std::size_t(1) << pairs[i].first;
        idx |= std::size_t(1) << pairs[i].second;
      }
    }
    amp[idx] = w;
  }
  return s;
}

Statevector kron_states(const Statevector &low, const Statevector &high) {
  const int n = low.num_qubits() + high.num_qubits();
  std::vector<cplx> amp(std::size_t(1) << n);
  const std::size_t nl = low.size();
  for (std::size_t h = 0; h < high.size(); ++h)
    for (std::size_t l = 0; l < nl; ++l)
      amp[h * nl + l] = high.amplitudes()[h] * low.amplitudes()[l];
  return Statevector(n, std::move(amp), 30);
}

void apply_one_qubit(Statevector &s, const Mat2 &m, int a) {
  check_qubit(s, a);
  kernel::apply_1q(s.amplitudes().data(), s.size(), m, s.bit_of(a));
}

void apply_two_qubit(Statevector &s, const Gate &g, int a, int b) {
  check_qubit(s, a);
  check_qubit(s, b);
  if (a == b) throw Error(Status::InvalidArgument, "gate acts twice on one qubit");
  kernel::apply_2q(s.amplitudes().data(), s.size(), g, s.bit_of(a), s.bit_of(b));
}

void apply_layer(Statevector &s, const Layer &layer) {
  for (const Placement &p : layer.gates) apply_two_qubit(s, p.g, p.a, p.b);
}

void evolve(Statevector &s, const Schedule &sched) {
  for (const Layer &l : sched) apply_layer(s, l);
}

Mat2 pauli_matrix(Pauli p) {
  Mat2 m;
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

cplx expectation_product(const Statevector &s,
                         const std::vector<std::pair<int, Mat2>> &ops) {
  std::vector<int> seen;
  for (const auto &op : ops) {
    check_qubit(s, op.first);
    if (std::find(seen.begin(), seen.end(), op.first) != seen.end()) {
      throw Error(Status::InvalidArgument, "observable repeats a qubit");
    }
    seen.push_back(op.first);
  }
  Statevector phi = s;
  for (const auto &op : ops) apply_one_qubit(phi, op.second, op.first);
  cplx num = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    num += std::conj(s.amplitudes()[i]) * phi.amplitudes()[i];
  double nrm = s.norm_sq();
  if (!(nrm > 0)) throw Error(Status::InvalidArgument, "zero-norm state");
  return num / nrm;
}

cplx expectation_pauli(const Statevector &s, const PauliString &p) {
  std::vector<std::pair<int, Mat2>> ops;
  for (const auto &[q, op] : p) ops.emplace_back(q, pauli_matrix(op));
  return expectation_product(s, ops);
}

StabilizerReport verify_stabilizers(const Statevector &s,
                                    const std::vector<std::vector<int>> &adjacency,
                                    const std::vector<int> &vertex_qubit, double tol) {
  if (adjacency.size() != vertex_qubit.size() ||
      static_cast<int>(vertex_qubit.size()) != s.num_qubits()) {
    throw Error(Status::InvalidArgument, "adjacency does not match the qubit count");
  }
  StabilizerReport rep;
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    PauliString p{{vertex_qubit[v], Pauli::X}};
    for (int u : adjacency[v]) p.emplace_back(vertex_qubit[u], Pauli::Z);
    double val = expectation_pauli(s, p).real();
    rep.values.push_back(val);
    rep.worst_deviation = std::max(rep.worst_deviation, std::abs(val - 1.0));
  }
  rep.pass = rep.worst_deviation <= tol;
  return rep;
}

MatX assemble_unitary(int n, const Schedule &sched) {
  if (n > kAssembleCap) {
    throw Error(Status::CapExceeded, "unitary assembly is capped at 12 qubits");
  }
  const std::size_t dim = std::size_t(1) << n;
  MatX U(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    Statevector s(n);
    s.amplitudes()[0] = 0;
    s.amplitudes()[c] = 1;
    evolve(s, sched);
    for (std::size_t r = 0; r < dim; ++r) U(r, c) = s.amplitudes()[r];
  }
  return U;
}

std::vector<std::uint64_t> sample_outcomes(const Statevector &s, std::size_t shots,
                                           std::uint64_t seed, double tol) {
  if (std::abs(s.norm_sq() - 1.0) > tol) {
    throw Error(Status::InvalidArgument, "sampling requires a normalized state");
  }
  std::vector<double> cdf(s.size());
  double acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    acc += std::norm(s.amplitudes()[i]);
    cdf[i] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, acc);
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::size_t k = 0; k < shots; ++k) {
    double x = u(rng);
    std::size_t idx = std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin();
    if (idx >= s.size()) idx = s.size() - 1;
    std::uint64_t word = 0;
    for (int q = 0; q < s.num_qubits(); ++q)
      if ((idx >> s.bit_of(q)) & 1) word |= std::uint64_t(1) << q;
    out.push_back(word);
  }
  return out;
}

void dump_statevector(const Statevector &s, const std::string &path) {
  std::ofstream bin(path, std::ios::binary);
  if (!bin) throw Error(Status::InvalidArgument, "cannot open " + path);
  for (const cplx &a : s.amplitudes()) {
    double re = a.real(), im = a.imag();
    bin.write(reinterpret_cast<const char *>(&re), sizeof(double));
    bin.write(reinterpret_cast<const char *>(&im), sizeof(double));
  }
  nlohmann::json side = {{"n", s.num_qubits()}, {"site_order", s.site_order()}};
  std::ofstream js(path + ".json");
  js << side.dump(2) << "\n";
}

}  // namespace duqc
