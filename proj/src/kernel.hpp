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

#ifndef DUQC_KERNEL_HPP
#define DUQC_KERNEL_HPP

#include <algorithm>
#include <cstddef>

#include "types.hpp"

namespace duqc::kernel {

inline std::size_t insert_zero(std::size_t x, int bit) {
  std::size_t low = x & ((std::size_t(1) << bit) - 1);
  return ((x >> bit) << (bit + 1)) | low;
}

// amp has `size` entries (a power of two); m acts on bit `bit`.
inline void apply_1q(cplx *amp, std::size_t size, const Mat2 &m, int bit) {
  const std::size_t step = std::size_t(1) << bit;
  const cplx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t k = 0; k < size / 2; ++k) {
    std::size_t i0 = insert_zero(k, bit);
    std::size_t i1 = i0 | step;
    cplx x0 = amp[i0], x1 = amp[i1];
    amp[i0] = m00 * x0 + m01 * x1;
    amp[i1] = m10 * x0 + m11 * x1;
  }
}

// g acts on (bit_a, bit_b) with bit_a the first tensor factor.
inline void apply_2q(cplx *amp, std::size_t size, const Gate &g, int bit_a, int bit_b) {
  const int lo = std::min(bit_a, bit_b), hi = std::max(bit_a, bit_b);
  const std::size_t ma = std::size_t(1) << bit_a, mb = std::size_t(1) << bit_b;
  for (std::size_t k = 0; k < size / 4; ++k) {
    std::size_t i00 = insert_zero(insert_zero(k, lo), hi);
    std::size_t idx[4] = {i00, i00 | mb, i00 | ma, i00 | ma | mb};
    cplx x[4] = {amp[idx[0]], amp[idx[1]], amp[idx[2]], amp[idx[3]]};
    for (int r = 0; r < 4; ++r)
      amp[idx[r]] = g(r, 0) * x[0] + g(r, 1) * x[1] + g(r, 2) * x[2] + g(r, 3) * x[3];
  }
}

}  // namespace duqc::kernel

#endif  // DUQC_KERNEL_HPP
