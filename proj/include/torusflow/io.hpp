// Copyright 2026 The torusflow Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torusflow/character.hpp"
#include "torusflow/ergodic.hpp"
#include "torusflow/frequency.hpp"
#include "torusflow/recurrence.hpp"
#include "torusflow/torus.hpp"

namespace torusflow {

// JSON documents. Exact rationals travel as "num/den" strings, basis values
// as decimal strings with 40 significant digits.

nlohmann::json system_to_json(const FrequencySystem& sys);
FrequencySystem system_from_json(const nlohmann::json& doc);

nlohmann::json torus_to_json(const TorusSpec& torus);
TorusSpec torus_from_json(const nlohmann::json& doc);

nlohmann::json character_to_json(const CharacterIndex& n);     // sparse [[k, n_k], ...]
CharacterIndex character_from_json(const nlohmann::json& doc);

nlohmann::json verdict_to_json(const ErgodicityVerdict& v);
nlohmann::json classification_to_json(const TrajectoryClass& c);
nlohmann::json return_record_to_json(const ReturnRecord& r);
nlohmann::json period_table_to_json(const PeriodTable& table);

// CSV emission: '.' decimal separator, '\n' line endings, mandatory header.

std::string format_double(double x);  // round-trip "%.17g"
std::string trajectory_csv(const std::vector<double>& times, const std::vector<PhasePoint>& points,
                           bool emit_qp);
std::string period_table_csv(const PeriodTable& table);

std::uint64_t fnv1a64(std::string_view bytes);
/// Hash of the minified config document, embedded in every report.
std::string config_hash_hex(const nlohmann::json& config);

}  // namespace torusflow
