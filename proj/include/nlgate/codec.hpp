// Copyright 2026 The nlgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "nlgate/channels.hpp"
#include "nlgate/gates.hpp"
#include "nlgate/operator.hpp"
#include "nlgate/protocol.hpp"
#include "nlgate/states.hpp"

namespace nlgate {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so dumps are short and reproducible.
Json number(double x);

/// Row-major rows of [re, im] pairs.
Json matrix_to_json(const Matrix &m);
/// Throws validation_error for ragged rows, non-square shape or bad entries.
Matrix matrix_from_json(const Json &j);

/// {"dims": [...], "matrix": rows}
Json to_json(const Operator &op);
/// Accepts the object form or a bare matrix (single subsystem).
Operator operator_from_json(const Json &j);

/// Column vector in the operator codec.
Json to_json(const PureState &psi);
PureState state_from_json(const Json &j);

/// {"d": int, "trace_flag": string, "kraus": [matrix, ...]}
Json to_json(const QuantumChannel &ch);
QuantumChannel channel_from_json(const Json &j);

Json to_json(const EntanglingVerdict &v);
Json to_json(const CanonicalForm &c);
Json to_json(const PhaseApproximation &p);
Json to_json(const StepRecord &s);
Json to_json(const ProtocolTrace &t);
Json to_json(const CostReport &r);
Json to_json(const MonteCarloSummary &s);

/// Parses text, reporting syntax errors as parse_error with line and column.
Json parse_json_text(const std::string &text, const std::string &source);
Json read_json_file(const std::string &path);

}  // namespace nlgate
