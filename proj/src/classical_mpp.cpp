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

#include "qtcert/classical_mpp.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "qtcert/error.hpp"
#include "qtcert/quadrature.hpp"
#include "qtcert/random.hpp"
#include "qtcert/search.hpp"

namespace qtcert {
namespace {

constexpr double kPovmTol = 1e-10;
constexpr double kIntegralTol = 1e-9;
constexpr double kGridStep = 1e-3;
constexpr double kGoldenTol = 1e-6;

void check_r(double r) {
    if (!(r >= 0.0 && r <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::out_of_range, "Bloch norm must lie in [0, 1], got " + std::to_string(r));
    }
}

// A_d(r) + B_d(r) = ∫ g_d(z, r)(1 + z) dz, sign-flipped for overlaps so that
// smaller is always better.
double mpp_objective(MeasureId m, double r) {
    const double v = integrate_polar([m, r](double z) { return g_value(m, z, r) * (1.0 + z); }, kIntegralTol).value;
    return orientation(m) == Orientation::distance_like ? v : -v;
}

}  // namespace

Povm::Povm(std::vector<PovmElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw Error(ErrorCode::invalid_argument, "POVM needs at least one element");
    }
    double total = 0.0;
    Vec3 first_moment;
    for (const auto &e : elements_) {
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
            throw Error(ErrorCode::invalid_argument, "POVM weight must be non-negative");
        }
        if (!is_physical(e.direction)) {
            throw Error(ErrorCode::invalid_argument, "POVM direction outside the Bloch ball");
        }
        total += e.weight;
        first_moment += e.weight * e.direction;
    }
    if (std::abs(total - 2.0) > kPovmTol) {
        throw Error(ErrorCode::invalid_argument, "POVM weights must sum to 2, got " + std::to_string(total));
    }
    if (norm(first_moment) > kPovmTol) {
        throw Error(ErrorCode::invalid_argument, "POVM weighted directions must sum to zero");
    }
}

Povm Povm::projective(const BlochVector &axis) {
    const double n = norm(axis);
    if (!(n > 0.0)) {
        throw Error(ErrorCode::invalid_argument, "projective measurement axis must be non-zero");
    }
    const BlochVector s = axis / n;
    return Povm({{1.0, s}, {1.0, -s}});
}

double a_integral(MeasureId m, double r) {
    check_r(r);
    return integrate_polar([m, r](double z) { return g_value(m, z, r); }, kIntegralTol).value;
}

double b_integral(MeasureId m, double r) {
    check_r(r);
    return integrate_polar([m, r](double z) { return g_value(m, z, r) * z; }, kIntegralTol).value;
}

double mpp_average(MeasureId m, const Povm &povm, const PreparationStrategy &prep) {
    if (prep.outputs.size() != povm.size()) {
        throw Error(ErrorCode::invalid_argument, "preparation strategy and POVM differ in length");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < povm.size(); ++i) {
        const auto &e = povm.elements()[i];
        const BlochVector &out = prep.outputs[i];
        if (!is_physical(out)) {
            throw Error(ErrorCode::non_physical, "prepared Bloch vector outside the ball");
        }
        const double r = std::min(norm(out), 1.0);
        double term = a_integral(m, r);
        if (r > 0.0) {
            term += dot(out, e.direction) / norm(out) * b_integral(m, r);
        }
        total += 0.25 * e.weight * term;
    }
    return total;
}

double optimal_r(MeasureId m) {
    const int steps = static_cast<int>(std::lround(1.0 / kGridStep));
    int best = 1;
    double best_value = mpp_objective(m, kGridStep);
    for (int i = 2; i <= steps; ++i) {
        const double v = mpp_objective(m, i * kGridStep);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    if (best == steps) {
        // Objective still falling at r = 1: check the last cell for an
        // interior dip before settling on the boundary.
        const double r = golden_section_minimize([m](double x) { return mpp_objective(m, x); }, 1.0 - kGridStep, 1.0,
                                                 kGoldenTol);
        return mpp_objective(m, r) < mpp_objective(m, 1.0) ? r : 1.0;
    }
    const double lo = (best - 1) * kGridStep;
    const double hi = (best + 1) * kGridStep;
    return golden_section_minimize([m](double x) { return mpp_objective(m, x); }, std::max(lo, 1e-12), hi, kGoldenTol);
}

ThresholdResult classical_threshold(MeasureId m) {
    static std::array<std::once_flag, kAllMeasures.size()> flags;
    static std::array<ThresholdResult, kAllMeasures.size()> cache;
    const auto idx = static_cast<std::size_t>(m);
    std::call_once(flags.at(idx), [m, idx] {
        const double r = optimal_r(m);
        cache[idx] = {m, r, 0.5 * (a_integral(m, r) + b_integral(m, r))};
    });
    return cache[idx];
}

MonteCarloEstimate simulate_mpp(MeasureId m, const Povm &povm, const PreparationStrategy &prep,
                                std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw Error(ErrorCode::invalid_argument, "simulate_mpp needs at least one sample");
    }
    if (prep.outputs.size() != povm.size()) {
        throw Error(ErrorCode::invalid_argument, "preparation strategy and POVM differ in length");
    }
    CounterRng rng(seed);
    const auto &elements = povm.elements();
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t n = 1; n <= samples; ++n) {
        const BlochVector t = sample_unit_sphere(rng);
        const double u = rng.uniform();
        std::size_t outcome = elements.size() - 1;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            cumulative += 0.5 * elements[i].weight * (1.0 + dot(t, elements[i].direction));
            if (u < cumulative) {
                outcome = i;
                break;
            }
        }
        const double x = pair_value(m, t, prep.outputs[outcome]);
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    MonteCarloEstimate out;
    out.mean = mean;
    out.samples = samples;
    out.std_error = samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples)) : 0.0;
    return out;
}

}  // namespace qtcert
