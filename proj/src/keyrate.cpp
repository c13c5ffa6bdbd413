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

#include "alphaeta/keyrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace alphaeta {

double binary_entropy(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
    }
    if (p == 0 || p == 1) {
        return 0;
    }
    // log1p keeps the (1-p) term accurate for tiny p.
    return -(p * std::log(p) + (1 - p) * std::log1p(-p)) / std::log(2.0);
}

KeyRateReport key_rate(double p_bob, double p_eve, double line_rate) {
    if (!(line_rate > 0) || !std::isfinite(line_rate)) {
        throw std::invalid_argument("key_rate: line rate must be positive and finite");
    }
    KeyRateReport report;
    report.p_bob = p_bob;
    report.p_eve = p_eve;
    report.line_rate = line_rate;
    double gap = binary_entropy(p_eve) - binary_entropy(p_bob);
    if (p_eve <= p_bob) {
        gap = 0;
    }
    report.fraction = std::clamp(gap, 0.0, 1.0);
    report.rate = line_rate * report.fraction;
    return report;
}

std::string_view to_string(BerColumn column) {
    return column == BerColumn::Exact ? "exact" : "asymptotic";
}

BerColumn parse_ber_column(std::string_view text) {
    if (text == "exact") {
        return BerColumn::Exact;
    }
    if (text == "asymptotic") {
        return BerColumn::Asymptotic;
    }
    throw std::invalid_argument("unknown BER column '" + std::string(text) + "' (expected exact or asymptotic)");
}

KeyRateReport key_rate_at(double mean_photons, DeferredStrategy eve, double line_rate, BerColumn column) {
    const BerLaw bob_law = helstrom_pure_antipodal(mean_photons);
    const BerLaw eve_law = eve_deferred_key_ber(mean_photons, eve);
    // The envelopes exceed 1/2 at small S; a BER never does.
    auto pick = [column](const BerLaw &law) {
        return column == BerColumn::Exact ? law.exact : std::min(0.5, law.asymptotic);
    };
    return key_rate(pick(bob_law), pick(eve_law), line_rate);
}

std::vector<KeyRateReport> key_rate_vs_s(std::span<const double> s_values, DeferredStrategy eve, double line_rate,
                                         BerColumn column) {
    std::vector<KeyRateReport> out;
    out.reserve(s_values.size());
    for (double s : s_values) {
        out.push_back(key_rate_at(s, eve, line_rate, column));
    }
    return out;
}

}  // namespace alphaeta
