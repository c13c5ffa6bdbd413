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

#include "alphaeta/report_json.hpp"

namespace alphaeta {

using nlohmann::ordered_json;

ordered_json to_json(const BerEstimate &estimate) {
    ordered_json j;
    j["errors"] = estimate.errors;
    j["trials"] = estimate.trials;
    j["p_hat"] = estimate.p_hat;
    j["ci_low"] = estimate.ci_low;
    j["ci_high"] = estimate.ci_high;
    j["confidence"] = 0.99;
    return j;
}

ordered_json to_json(const SimConfig &config) {
    // `threads` is deliberately absent: it never changes the result.
    ordered_json j;
    j["S"] = config.mean_photons;
    j["M"] = config.m_bases;
    j["mapping"] = to_string(config.mapping);
    j["seed_key"] = config.seed_key;
    j["bob_receiver"] = to_string(config.bob.kind);
    j["phase_resolution"] = config.bob.resolution;
    j["eve_strategy"] = to_string(config.eve);
    j["trials"] = config.trials;
    j["master_seed"] = config.master_seed;
    j["dsr_d"] = config.dsr_d;
    return j;
}

ordered_json to_json(const TrialReport &report) {
    ordered_json j;
    j["config"] = to_json(report.config);
    j["bob"] = to_json(report.bob);
    j["eve"] = report.eve ? to_json(*report.eve) : ordered_json(nullptr);
    j["analytic_bob"] = report.analytic_bob;
    j["analytic_eve"] = report.analytic_eve ? ordered_json(*report.analytic_eve) : ordered_json(nullptr);
    j["analytic_eve_kind"] =
        report.analytic_eve_kind.empty() ? ordered_json(nullptr) : ordered_json(report.analytic_eve_kind);
    return j;
}

ordered_json to_json(const KeyRateReport &report) {
    ordered_json j;
    j["p_bob"] = report.p_bob;
    j["p_eve"] = report.p_eve;
    j["line_rate"] = report.line_rate;
    j["rate"] = report.rate;
    j["fraction"] = report.fraction;
    return j;
}

std::string dump_json(const ordered_json &doc) {
    return doc.dump(2) + "\n";
}

}  // namespace alphaeta
