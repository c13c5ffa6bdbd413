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

#ifndef ALPHAETA_ANGLES_HPP
#define ALPHAETA_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace alphaeta {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite angle onto [-pi, pi).
inline double wrap_phase(double phi) {
    double r = std::fmod(phi + kPi, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    // fmod can round up to exactly 2pi for tiny negative inputs.
    if (r >= kTwoPi) {
        r -= kTwoPi;
    }
    return r - kPi;
}

/// Smallest absolute difference between two angles, in [0, pi].
inline double angular_distance(double a, double b) {
    return std::abs(wrap_phase(a - b));
}

}  // namespace alphaeta

#endif
