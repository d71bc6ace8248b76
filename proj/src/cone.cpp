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

#include "cone.hpp"

#include <algorithm>

#include "kernel.hpp"

namespace duqc {

namespace {

using Live = std::vector<std::vector<char>>;

Live backward_live(int n, const std::vector<ConeLayer> &layers,
                   const std::vector<int> &targets) {
  const int T = static_cast<int>(layers.size());
  Live live(T + 1, std::vector<char>(n, 0));
  for (int q : targets) {
    if (q < 0 || q >= n) throw Error(Status::InvalidArgument, "target out of range");
    live[T][q] = 1;
  }
  for (int tau = T - 1; tau >= 0; --tau) {
    live[tau] = live[tau + 1];
    for (const ConeGate &g : layers[tau]) {
      if (g.a < 0 || g.a >= n || g.b < 0 || g.b >= n || g.a == g.b) {
        throw Error(Status::InvalidArgument, "gate placement out of range");
      }
      if (live[tau + 1][g.a] || live[tau + 1][g.b]) live[tau][g.a] = live[tau][g.b] = 1;
    }
  }
  return live;
}

class Dm {
 public:
  explicit Dm(int cap) : cap_(cap), rho_(MatX::Ones(1, 1)) {}

  int size() const { return static_cast<int>(act_.size()); }
  bool has(int q) const { return pos(q) >= 0; }

  void add(const std::vector<int> &qubits, const MatX &r) {
    const int k = size();
    const int m = static_cast<int>(qubits.size());
    if (k + m > cap_) {
      throw Error(Status::CapExceeded, "light cone needs " + std::to_string(k + m) +
                                           " active qubits, cap is " +
                                           std::to_string(cap_));
    }
    const Eigen::Index D = rho_.rows(), R = r.rows();
    MatX out(D * R, D * R);
    for (Eigen::Index jh = 0; jh < R; ++jh)
      for (Eigen::Index ih = 0; ih < R; ++ih)
        out.block(ih * D, jh * D, D, D) = r(ih, jh) * rho_;
    rho_ = std::move(out);
    act_.insert(act_.end(), qubits.begin(), qubits.end());
  }

  void add_mixed(int q) { add({q}, 0.5 * MatX::Identity(2, 2)); }

  void trace(int q) {
    const int i = pos(q);
    const Eigen::Index D = rho_.rows() / 2;
    MatX out(D, D);
    for (Eigen::Index c = 0; c < D; ++c) {
      std::size_t c0 = kernel::insert_zero(c, i), c1 = c0 | (std::size_t(1) << i);
      for (Eigen::Index r = 0; r < D; ++r) {
        std::size_t r0 = kernel::insert_zero(r, i), r1 = r0 | (std::size_t(1) << i);
        out(r, c) = rho_(r0, c0) + rho_(r1, c1);
      }
    }
    rho_ = std::move(out);
    act_.erase(act_.begin() + i);
  }

  void apply(const Gate &g, int a, int b) {
    const int k = size(), ia = pos(a), ib = pos(b);
    const std::size_t sz = static_cast<std::size_t>(rho_.size());
    kernel::apply_2q(rho_.data(), sz, g, ia, ib);
    kernel::apply_2q(rho_.data(), sz, g.conjugate(), k + ia, k + ib);
  }

  cplx expectation(const std::vector<std::pair<int, Mat2>> &ops) const {
    MatX m = rho_;
    for (const auto &[q, o] : ops) {
      kernel::apply_1q(m.data(), static_cast<std::size_t>(m.size()), o, pos(q));
    }
    return m.trace();
  }

 private:
  int pos(int q) const {
    auto it = std::find(act_.begin(), act_.end(), q);
    return it == act_.end() ? -1 : static_cast<int>(it - act_.begin());
  }

  int cap_;
  std::vector<int> act_;
  MatX rho_;
};

}  // namespace

std::vector<int> cone_inputs(int n, const std::vector<ConeLayer> &layers,
                             const std::vector<int> &targets) {
  Live live = backward_live(n, layers, targets);
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (live[0][q]) out.push_back(q);
  return out;
}

ConeResult cone_expectation(int n, const ConeInit &init,
                            const std::vector<ConeLayer> &layers,
                            const std::vector<std::pair<int, Mat2>> &targets, int cap) {
  std::vector<int> tq;
  for (const auto &t : targets) {
    if (std::find(tq.begin(), tq.end(), t.first) != tq.end()) {
      throw Error(Status::InvalidArgument, "observable repeats a qubit");
    }
    tq.push_back(t.first);
  }
  Live live = backward_live(n, layers, tq);
  std::vector<char> mixed(n, 0), covered(n, 0);
  ConeResult res;
  Dm dm(cap);

  auto track = [&] { res.max_active = std::max(res.max_active, dm.size()); };

  for (std::size_t i = 0; i < init.epr_pairs.size(); ++i) {
    const auto [a, b] = init.epr_pairs[i];
    covered[a] = covered[b] = 1;
    const bool la = live[0][a], lb = live[0][b];
    if (la && lb) {
      if (i < init.pair_states.size() && init.pair_states[i].size() > 0) {
        dm.add({a, b}, init.pair_states[i]);
      } else {
        MatX bell = MatX::Zero(4, 4);
        bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
        dm.add({a, b}, bell);
      }
    } else if (la) {
      mixed[a] = 1;
    } else if (lb) {
      mixed[b] = 1;
    }
  }
  for (const InitBlock &blk : init.blocks) {
    std::vector<int> used;
    for (int q : blk.qubits) {
      covered[q] = 1;
      if (live[0][q]) used.push_back(q);
    }
    if (used.empty()) continue;
    dm.add(blk.qubits, blk.rho);
    track();
    for (int q : blk.qubits)
      if (!live[0][q]) dm.trace(q);
  }
  for (int q = 0; q < n; ++q) {
    if (live[0][q] && !covered[q]) {
      throw Error(Status::InvalidArgument, "cone input qubit without an initial state");
    }
  }
  track();

  for (std::size_t tau = 0; tau < layers.size(); ++tau) {
    const std::vector<char> &out = live[tau + 1];
    for (const ConeGate &g : layers[tau]) {
      const int a = g.a, b = g.b;
      const bool oa = out[a], ob = out[b];
      if (!oa && !ob) continue;
      if (mixed[a] && mixed[b]) {
        mixed[a] = oa;
        mixed[b] = ob;
        continue;
      }
      if (g.dual_unitary && oa && !ob && mixed[b]) {
        mixed[b] = 0;
        dm.trace(a);
        mixed[a] = 1;
        continue;
      }
      if (g.dual_unitary && ob && !oa && mixed[a]) {
        mixed[a] = 0;
        dm.trace(b);
        mixed[b] = 1;
        continue;
      }
      for (int q : {a, b}) {
        if (mixed[q]) {
          mixed[q] = 0;
          dm.add_mixed(q);
        }
      }
      track();
      dm.apply(g.g, a, b);
      if (!oa) dm.trace(a);
      if (!ob) dm.trace(b);
    }
  }

  cplx value = 1.0;
  std::vector<std::pair<int, Mat2>> rest;
  bool all_mixed = true;
  for (const auto &[q, o] : targets) {
    if (mixed[q]) {
      value *= 0.5 * o.trace();
    } else {
      rest.emplace_back(q, o);
      all_mixed = false;
    }
  }
  value *= dm.expectation(rest);
  res.value = value;
  res.certified = all_mixed;
  return res;
}

}  // namespace duqc
