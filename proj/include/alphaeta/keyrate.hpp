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

#ifndef ALPHAETA_KEYRATE_HPP
#define ALPHAETA_KEYRATE_HPP

#include <span>
#include <string_view>
#include <vector>

#include "alphaeta/receivers.hpp"

namespace alphaeta {

/// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

/// Fresh key after privacy amplification, modelled as the entropy gap
///     rate = line_rate * max(0, h(p_eve) - h(p_bob)).
struct KeyRateReport {
    double p_bob = 0;
    double p_eve = 0;
    double line_rate = 0;
    double rate = 0;
    double fraction = 0;
};

KeyRateReport key_rate(double p_bob, double p_eve, double line_rate);

/// Which column of a BerLaw feeds the key-rate formula.
enum class BerColumn { Exact, Asymptotic };

std::string_view to_string(BerColumn column);
BerColumn parse_ber_column(std::string_view text);

/// Bob uses the optimal keyed receiver, Eve the given deferred strategy.
KeyRateReport key_rate_at(double mean_photons, DeferredStrategy eve, double line_rate,
                          BerColumn column = BerColumn::Exact);

std::vector<KeyRateReport> key_rate_vs_s(std::span<const double> s_values, DeferredStrategy eve,
                                         double line_rate, BerColumn column = BerColumn::Exact);

}  // namespace alphaeta

#endif
