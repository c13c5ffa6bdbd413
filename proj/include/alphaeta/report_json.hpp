// Copyright 2026 The alphaeta Authors
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

// JSON documents emitted by the CLI and the Python module. Schemas live in
// schemas/trial_report.schema.json and schemas/keyrate_report.schema.json.

#ifndef ALPHAETA_REPORT_JSON_HPP
#define ALPHAETA_REPORT_JSON_HPP

#include <json.hpp>

#include "alphaeta/keyrate.hpp"
#include "alphaeta/montecarlo.hpp"

namespace alphaeta {

nlohmann::ordered_json to_json(const BerEstimate &estimate);
nlohmann::ordered_json to_json(const SimConfig &config);
nlohmann::ordered_json to_json(const TrialReport &report);
nlohmann::ordered_json to_json(const KeyRateReport &report);

/// Two-space indented dump followed by a newline.
std::string dump_json(const nlohmann::ordered_json &doc);

}  // namespace alphaeta

#endif
