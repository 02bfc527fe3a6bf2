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

#include "qtcert/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtcert/error.hpp"

namespace qtcert {
namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kNormSlack = 1e-10;
// A few ulps below 1: a unit vector after roundoff. Without the snap,
// √(1 - n²) turns a 1e-16 residue into a 1e-8 error.
constexpr double kPureSnap = 1e-15;

// Clamp roundoff excursions back into [lo, hi]; anything further out is a
// caller bug.
double clamp_domain(double x, double lo, double hi, const char *what) {
    if (!(x >= lo - kDomainSlack && x <= hi + kDomainSlack)) {
        throw Error(ErrorCode::out_of_range, std::string(what) + " outside its domain: " + std::to_string(x));
    }
    return std::clamp(x, lo, hi);
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

struct Clamped {
    BlochVector v;
    double n;
};

Clamped clamp_norm(const BlochVector &v) {
    const double n = norm(v);
    if (!(n <= 1.0 + kNormSlack)) {
        throw Error(ErrorCode::non_physical, "Bloch vector norm " + std::to_string(n) + " exceeds 1");
    }
    if (n > 1.0) {
        return {v / n, 1.0};
    }
    if (n >= 1.0 - kPureSnap) {
        return {v, 1.0};
    }
    return {v, n};
}

double fidelity_pair(const Clamped &r, const Clamped &s) {
    const double f = 0.5 * (1.0 + dot(r.v, s.v) +
                            std::sqrt(std::max(0.0, 1.0 - r.n * r.n)) * std::sqrt(std::max(0.0, 1.0 - s.n * s.n)));
    return std::clamp(f, 0.0, 1.0);
}

double affinity_pair(const Clamped &r, const Clamped &s) {
    const double num =
        dot(r.v, s.v) + (1.0 + std::sqrt(std::max(0.0, 1.0 - r.n * r.n))) * (1.0 + std::sqrt(std::max(0.0, 1.0 - s.n * s.n)));
    const double den = (std::sqrt(1.0 + r.n) + std::sqrt(1.0 - r.n)) * (std::sqrt(1.0 + s.n) + std::sqrt(1.0 - s.n));
    return num / den;
}

double qjsd_pair(const Clamped &r, const Clamped &s) {
    const double mid = std::min(1.0, norm(0.5 * (r.v + s.v)));
    return std::max(0.0, binary_entropy(mid) - 0.5 * binary_entropy(r.n) - 0.5 * binary_entropy(s.n));
}

double qjsd_reduced(double z, double r) {
    const double mid = std::min(1.0, 0.5 * std::sqrt(std::max(0.0, 1.0 + 2.0 * r * z + r * r)));
    return std::max(0.0, binary_entropy(mid) - 0.5 * binary_entropy(r));
}

double affinity_reduced(double z, double r) {
    return (1.0 + r * z + std::sqrt(std::max(0.0, 1.0 - r * r))) /
           (std::sqrt(2.0) * (std::sqrt(1.0 + r) + std::sqrt(1.0 - r)));
}

}  // namespace

std::string_view measure_name(MeasureId m) {
    switch (m) {
        case MeasureId::trace:
            return "trace";
        case MeasureId::fidelity:
            return "fidelity";
        case MeasureId::wootters:
            return "wootters";
        case MeasureId::bures:
            return "bures";
        case MeasureId::affinity:
            return "affinity";
        case MeasureId::hellinger:
            return "hellinger";
        case MeasureId::qjsd:
            return "qjsd";
        case MeasureId::transmission:
            return "transmission";
    }
    return "unknown";
}

std::optional<MeasureId> parse_measure(std::string_view name) {
    for (MeasureId m : kAllMeasures) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

double binary_entropy(double t) {
    t = clamp_domain(t, 0.0, 1.0, "binary_entropy argument");
    return entropy_term(0.5 * (1.0 + t)) + entropy_term(0.5 * (1.0 - t));
}

double pair_value(MeasureId m, const BlochVector &r_in, const BlochVector &s_in) {
    const Clamped r = clamp_norm(r_in);
    const Clamped s = clamp_norm(s_in);
    switch (m) {
        case MeasureId::trace:
            return 0.5 * norm(r.v - s.v);
        case MeasureId::fidelity:
            return fidelity_pair(r, s);
        case MeasureId::wootters:
            return std::acos(std::sqrt(fidelity_pair(r, s)));
        case MeasureId::bures:
            return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(fidelity_pair(r, s)))));
        case MeasureId::affinity:
            return affinity_pair(r, s);
        case MeasureId::hellinger:
            return std::max(0.0, 2.0 - 2.0 * affinity_pair(r, s));
        case MeasureId::qjsd:
            return qjsd_pair(r, s);
        case MeasureId::transmission:
            return std::sqrt(qjsd_pair(r, s));
    }
    throw Error(ErrorCode::invalid_argument, "unknown measure");
}

double g_value(MeasureId m, double z, double r) {
    z = clamp_domain(z, -1.0, 1.0, "alignment z");
    r = clamp_domain(r, 0.0, 1.0, "Bloch norm r");
    switch (m) {
        case MeasureId::trace:
            return 0.5 * std::sqrt(std::max(0.0, 1.0 - 2.0 * r * z + r * r));
        case MeasureId::fidelity:
            return 0.5 * (1.0 + r * z);
        case MeasureId::wootters:
            return std::acos(std::sqrt(std::clamp(0.5 * (1.0 + r * z), 0.0, 1.0)));
        case MeasureId::bures:
            return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(std::clamp(0.5 * (1.0 + r * z), 0.0, 1.0)))));
        case MeasureId::affinity:
            return affinity_reduced(z, r);
        case MeasureId::hellinger:
            return std::max(0.0, 2.0 - 2.0 * affinity_reduced(z, r));
        case MeasureId::qjsd:
            return qjsd_reduced(z, r);
        case MeasureId::transmission:
            return std::sqrt(qjsd_reduced(z, r));
    }
    throw Error(ErrorCode::invalid_argument, "unknown measure");
}

}  // namespace qtcert
