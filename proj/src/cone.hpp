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

#ifndef DUQC_CONE_HPP
#define DUQC_CONE_HPP

#include <utility>
#include <vector>

#include "types.hpp"

namespace duqc {

// Light-cone density-matrix evaluator. Gates outside the backward cone of
// the observable are dropped. Qubits known to be maximally mixed and
// uncorrelated are tracked as flags instead of being stored.
inline constexpr int kConeCap = 11;

struct ConeGate {
  int a = 0;
  int b = 0;
  Gate g = Gate::Identity();
  bool dual_unitary = false;
};
using ConeLayer = std::vector<ConeGate>;

// Density matrix on `qubits`; local bit i is qubits[i].
struct InitBlock {
  std::vector<int> qubits;
  MatX rho;
};

// pair_states[i], when present, is the 4x4 state of epr_pairs[i] (local bit
// 0 is the first qubit); it must have maximally mixed marginals. Missing
// entries default to the Bell state.
struct ConeInit {
  std::vector<std::pair<int, int>> epr_pairs;
  std::vector<MatX> pair_states;
  std::vector<InitBlock> blocks;
};

struct ConeResult {
  cplx value = 0.0;
  bool certified = false;  // every target ended maximally mixed
  int max_active = 0;
};

// Qubits feeding the cone at time zero, sorted.
std::vector<int> cone_inputs(int n, const std::vector<ConeLayer> &layers,
                             const std::vector<int> &targets);

// Tr(rho(t) prod_k O_k) for single-qubit factors on distinct targets.
ConeResult cone_expectation(int n, const ConeInit &init,
                            const std::vector<ConeLayer> &layers,
                            const std::vector<std::pair<int, Mat2>> &targets,
                            int cap = kConeCap);

}  // namespace duqc

#endif  // DUQC_CONE_HPP
