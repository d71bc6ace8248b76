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

#ifndef DUQC_RANDOM_HPP
#define DUQC_RANDOM_HPP

#include <cstdint>
#include <random>

#include "types.hpp"

namespace duqc {

using Rng = std::mt19937_64;

// Haar-distributed n x n unitary: QR of a complex Ginibre matrix with the
// diagonal of R rotated onto the positive reals.
MatX haar_unitary(int n, Rng &rng);

double uniform(Rng &rng, double lo, double hi);

}  // namespace duqc

#endif  // DUQC_RANDOM_HPP
