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

#ifndef DUQC_TYPES_HPP
#define DUQC_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace duqc {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Gate = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultTol = 1e-10;

enum class Status {
  Ok = 0,
  InvalidArgument = 1,
  Parse = 2,
  NotDualUnitary = 3,
  NotSolvable = 4,
  LateRegime = 5,
  CapExceeded = 6,
  Unreachable = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

// Raised by the fast paths when no early-time claim can be made.
class LateTimeSignal : public Error {
 public:
  explicit LateTimeSignal(const std::string &msg)
      : Error(Status::LateRegime, msg) {}
};

}  // namespace duqc

#endif  // DUQC_TYPES_HPP
