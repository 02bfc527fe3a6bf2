// Copyright 2026 The qtcert Authors
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

#include <array>
#include <optional>
#include <string_view>

#include "qtcert/bloch.hpp"

namespace qtcert {

enum class MeasureId { trace, fidelity, wootters, bures, affinity, hellinger, qjsd, transmission };

enum class Orientation {
    distance_like,  // vanishes iff the states coincide
    overlap_like,   // maximal iff the states coincide
};

inline constexpr std::array<MeasureId, 8> kAllMeasures = {
    MeasureId::trace,    MeasureId::fidelity,  MeasureId::wootters, MeasureId::bures,
    MeasureId::affinity, MeasureId::hellinger, MeasureId::qjsd,     MeasureId::transmission,
};

constexpr Orientation orientation(MeasureId m) {
    return (m == MeasureId::fidelity || m == MeasureId::affinity) ? Orientation::overlap_like
                                                                  : Orientation::distance_like;
}

/// True when `a` is strictly better than `b` under the measure's orientation
/// (smaller for distances, larger for overlaps).
constexpr bool is_better(Orientation o, double a, double b) {
    return o == Orientation::distance_like ? a < b : a > b;
}

std::string_view measure_name(MeasureId m);
std::optional<MeasureId> parse_measure(std::string_view name);

/// H₂(t) = -(1+t)/2 log₂((1+t)/2) - (1-t)/2 log₂((1-t)/2), the entropy in bits
/// of a qubit with Bloch norm t. Uses 0 log 0 = 0.
double binary_entropy(double t);

/// d(r, s) for qubits with Bloch vectors r and s. Norms up to 1 + 1e-10 are
/// clamped onto the sphere; larger norms throw Error(non_physical).
double pair_value(MeasureId m, const BlochVector &r, const BlochVector &s);

/// Reduced form g_d(z, r) = d(t, s) for a pure t and |s| = r at cos(angle) z.
/// Throws Error(out_of_range) for z outside [-1, 1] or r outside [0, 1]
/// (beyond 1e-12 of roundoff).
double g_value(MeasureId m, double z, double r);

}  // namespace qtcert
