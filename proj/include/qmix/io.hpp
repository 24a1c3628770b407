// Copyright 2026 The qmix Authors
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

// JSON and CSV encodings of channels, generators, k-functions and reports.
//
// Matrices are arrays of rows, each entry a two-element array [re, im].
// Channel:     {"dim": d, "kraus": [M, ...]}
// Generator:   {"dim": d, "hamiltonian": M, "jumps": [M, ...]}
// k-function:  {"family": "...", "param": x}
// Parsing is strict: unknown keys and shape errors are reported with the
// path of the offending field, e.g. "kraus[0]".

#pragma once

#include "qmix/balance.hpp"
#include "qmix/channel.hpp"
#include "qmix/contraction.hpp"
#include "qmix/geometry.hpp"
#include "qmix/kfunction.hpp"
#include "qmix/metric.hpp"
#include "qmix/mixing.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qmix {

using json = nlohmann::ordered_json;

json matrix_to_json(const Matrix& m);
json real_matrix_to_json(const RealMatrix& m);
/// `path` prefixes error messages. Throws ParseError on shape problems.
Matrix matrix_from_json(const json& j, const std::string& path, Index dim = -1);

json channel_to_json(const QuantumChannel& t);
QuantumChannel channel_from_json(const json& j);
json liouvillian_to_json(const Liouvillian& l);
Liouvillian liouvillian_from_json(const json& j);
json kfunction_to_json(const KFunction& k);
KFunction kfunction_from_json(const json& j);
/// "bures", "mean-alpha:0.5", or an inline JSON object.
KFunction kfunction_from_string(const std::string& s);
json density_to_json(const DensityMatrix& rho);
/// Column-stochastic matrix given as a bare array of rows or {"P": rows}.
RealMatrix stochastic_from_json(const json& j);

/// Extended reals serialize as numbers or the string "+inf".
json extended_to_json(const ExtendedReal& x);

json mixing_report_to_json(const MixingReport& r);
std::string mixing_report_to_csv(const MixingReport& r);
json db_report_to_json(const DetailedBalanceReport& r, bool include_matrix);
json cheeger_report_to_json(const CheegerReport& r);
json estimate_to_json(const ContractionEstimate& e);
json classification_to_json(const QuantumChannel& t);

/// Serializes with every floating-point value printed to 17 significant
/// digits. Output is byte-stable for equal input.
std::string dump_json(const json& j, int indent = 2);

json parse_json_text(const std::string& text, const std::string& source);
std::string read_file(const std::string& path);
/// Writes through a temporary file and rename, so readers never observe a
/// partial file.
void write_file_atomic(const std::string& path, const std::string& content);
/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace qmix
