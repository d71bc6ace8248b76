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

#ifndef DUQC_IO_HPP
#define DUQC_IO_HPP

#include <json.hpp>
#include <string>

#include "circuit1d.hpp"
#include "circuit2d.hpp"

namespace duqc::io {

using nlohmann::json;

// Parse errors surface as Error(Status::Parse, ...).
json parse_text(const std::string &text);
json read_file(const std::string &path);

json complex_to_json(cplx z);
cplx complex_from_json(const json &j);
json matrix_to_json(const MatX &m);  // rows of [re, im]
MatX matrix_from_json(const json &j, int rows, int cols);

// {"kind": "matrix" | "dual_params" | "named", ...}
json gate_to_json(const Gate &g);
Gate gate_from_json(const json &j);

// {"chi": n, "blocks": {"00": [[...]], ...}}
json tensor_to_json(const SolvableTensor &A);
SolvableTensor tensor_from_json(const json &j);

// {"qubits": 2N, "boundary": ..., "layers": [{"tau": k, "gates": [{"bond", "gate"}]}]}
json circuit1d_to_json(const Circuit1D &c);
Circuit1D circuit1d_from_json(const json &j, double tol = kDefaultTol);

// Adds "rows", "cols", "edge_mask" and per-gate {"from": [j,k], "to": [j,k]}.
json circuit2d_to_json(const Circuit2D &c);
Circuit2D circuit2d_from_json(const json &j, double tol = kDefaultTol);
bool is_circuit2d(const json &j);

// "Z@3", "ZZ@4,5", "XP0@7", or an inline {"start": s, "factors": [...]}.
LocalObservable parse_observable_1d(const std::string &spec);
// "Z@2:3" or an l*l Pauli word "ZZZZ@1:1" for an l x l block.
BlockObservable parse_observable_2d(const std::string &spec);

json fast_result_to_json(const FastResult &r);
const char *status_name(Status s);

}  // namespace duqc::io

#endif  // DUQC_IO_HPP
