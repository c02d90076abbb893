// Copyright 2026 The nmrqpe Authors
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

// Phases measured in turns (fractions of 2*pi).

#pragma once

#include <cmath>

namespace nmrqpe {

/// Reduces x into [0, 1).
inline double wrap_turns(double x) {
    double w = x - std::floor(x);
    return w >= 1.0 ? 0.0 : w;
}

/// Mod-1 distance min(|a-b|, 1-|a-b|).
inline double turn_distance(double a, double b) {
    double d = wrap_turns(a - b);
    return std::min(d, 1.0 - d);
}

inline double degrees_to_turns(double degrees) { return degrees / 360.0; }

}  // namespace nmrqpe
