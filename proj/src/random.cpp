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

#include "random.hpp"

#include <cmath>

namespace duqc {

MatX haar_unitary(int n, Rng &rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatX z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      z(i, j) = cplx(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<MatX> qr(z);
  MatX q = qr.householderQ() * MatX::Identity(n, n);
  MatX r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

double uniform(Rng &rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

}  // namespace duqc
