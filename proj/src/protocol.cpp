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

#include "qtcert/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qtcert/error.hpp"
#include "qtcert/quadrature.hpp"
#include "qtcert/random.hpp"

namespace qtcert {
namespace {

constexpr double kZeroProbability = 1e-14;
constexpr double kOutputNormSlack = 1e-9;

// Per-outcome affine data so that p_i = (1 + t·a_i)/4 and
// t_i = (c_i + M_i t)/(4 p_i).
struct OutcomeMap {
    BlochVector a;
    BlochVector c;
    Mat3 m;
};

std::array<OutcomeMap, 4> outcome_maps(const TwoQubitFano &resource, const BobStrategy &strategy) {
    std::array<OutcomeMap, 4> maps;
    const Mat3 corr_t = transpose(resource.corr);
    for (int i = 1; i <= 4; ++i) {
        const Mat3 w = bell_correlation_matrix(i);
        const Mat3 &rot = strategy.rotation(i);
        auto &om = maps[static_cast<std::size_t>(i - 1)];
        om.a = w * resource.bloch_a;
        om.c = rot * resource.bloch_b;
        om.m = rot * corr_t * w;  // R_i (w_i r)ᵀ, w_i symmetric
    }
    return maps;
}

ProtocolOutcome evaluate(const OutcomeMap &om, const BlochVector &t) {
    ProtocolOutcome out;
    out.probability = 0.25 * (1.0 + dot(t, om.a));
    if (out.probability <= kZeroProbability) {
        out.defined = false;
        return out;
    }
    out.output = (om.c + om.m * t) / (4.0 * out.probability);
    const double n = norm(out.output);
    if (n > 1.0 && n <= 1.0 + kOutputNormSlack) {
        out.output = out.output / n;
    }
    return out;
}

double score(MeasureId m, const std::array<OutcomeMap, 4> &maps, const BlochVector &t) {
    double s = 0.0;
    for (const auto &om : maps) {
        const ProtocolOutcome o = evaluate(om, t);
        if (o.defined) {
            s += o.probability * pair_value(m, t, o.output);
        }
    }
    return s;
}

double sphere_average(MeasureId m, const std::array<OutcomeMap, 4> &maps, int n_z, int n_phi) {
    const auto &rule = gauss_legendre(n_z);
    std::vector<double> cos_phi(n_phi);
    std::vector<double> sin_phi(n_phi);
    for (int j = 0; j < n_phi; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / n_phi;
        cos_phi[j] = std::cos(phi);
        sin_phi[j] = std::sin(phi);
    }
    double total = 0.0;
    for (int i = 0; i < n_z; ++i) {
        const double z = rule.nodes[i];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            ring += score(m, maps, {s * cos_phi[j], s * sin_phi[j], z});
        }
        total += rule.weights[i] * ring;
    }
    // (1/4π) · 2π/n_phi
    return total / (2.0 * n_phi);
}

}  // namespace

BobStrategy::BobStrategy(const std::array<Mat3, 4> &rotations) : rotations_(rotations) {
    for (const auto &r : rotations_) {
        if (!is_rotation(r, 1e-12)) {
            throw Error(ErrorCode::invalid_argument, "Bob strategy entries must be proper rotations");
        }
    }
}

std::array<ProtocolOutcome, 4> protocol_outcomes(const TwoQubitFano &resource, const BobStrategy &strategy,
                                                 const BlochVector &input) {
    if (std::abs(norm(input) - 1.0) > 1e-10) {
        throw Error(ErrorCode::invalid_argument, "teleported input must be a pure state (unit Bloch vector)");
    }
    const auto maps = outcome_maps(resource, strategy);
    std::array<ProtocolOutcome, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = evaluate(maps[i], input);
    }
    return out;
}

double average_distance(MeasureId m, const TwoQubitFano &resource, const BobStrategy &strategy, double tol) {
    const auto maps = outcome_maps(resource, strategy);
    int n_z = 64;
    int n_phi = 128;
    double previous = sphere_average(m, maps, n_z, n_phi);
    while (n_z < 2048) {
        n_z *= 2;
        n_phi *= 2;
        const double current = sphere_average(m, maps, n_z, n_phi);
        if (std::abs(current - previous) < tol) {
            return current;
        }
        previous = current;
    }
    throw Error(ErrorCode::not_converged, "sphere quadrature did not reach tolerance " + std::to_string(tol));
}

double avg_fidelity_closed(const TwoQubitFano &resource, const BobStrategy &strategy) {
    Mat3 acc;
    const Mat3 corr_t = transpose(resource.corr);
    for (int i = 1; i <= 4; ++i) {
        acc = acc + strategy.rotation(i) * corr_t * transpose(bell_correlation_matrix(i));
    }
    return 0.5 * (1.0 + 0.25 * trace(acc) / 3.0);
}

CanonicalDecomposition canonical_decomposition(const CorrelationMatrix &corr) {
    const ProperSvd svd = proper_svd(corr);
    return {svd.u, svd.s, svd.v};
}

BobStrategy optimal_rotations_fidelity(const TwoQubitFano &resource) {
    const CanonicalDecomposition cd = canonical_decomposition(resource.corr);
    std::optional<BobStrategy> best;
    double best_fidelity = 0.0;
    double best_trace = 0.0;
    for (int l = 1; l <= 4; ++l) {
        const Mat3 core = cd.o1 * bell_correlation_matrix(l) * transpose(cd.o2);
        std::array<Mat3, 4> rots;
        for (int i = 1; i <= 4; ++i) {
            rots[static_cast<std::size_t>(i - 1)] = bell_correlation_matrix(i) * core;
        }
        BobStrategy candidate(rots);
        const double f = avg_fidelity_closed(resource, candidate);
        // Among equally good candidates the standard correction R_i = w_i w_1
        // wins, then the smallest trace.
        const double tr = max_abs_diff(core, bell_correlation_matrix(1)) < 1e-9 ? -4.0 : trace(core);
        const bool better = !best || f > best_fidelity + 1e-12 || (std::abs(f - best_fidelity) <= 1e-12 && tr < best_trace);
        if (better) {
            best = candidate;
            best_fidelity = f;
            best_trace = tr;
        }
    }
    return *best;
}

BobStrategy werner_optimal_rotations(int bell_index) {
    const Mat3 wk = bell_correlation_matrix(bell_index);
    std::array<Mat3, 4> rots;
    for (int i = 1; i <= 4; ++i) {
        rots[static_cast<std::size_t>(i - 1)] = bell_correlation_matrix(i) * wk;
    }
    return BobStrategy(rots);
}

MonteCarloEstimate simulate_protocol(MeasureId m, const TwoQubitFano &resource, const BobStrategy &strategy,
                                     std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw Error(ErrorCode::invalid_argument, "simulate_protocol needs at least one sample");
    }
    const auto maps = outcome_maps(resource, strategy);
    CounterRng rng(seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t n = 1; n <= samples; ++n) {
        const double x = score(m, maps, sample_unit_sphere(rng));
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
