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

#include "qtcert/certification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "qtcert/classical_mpp.hpp"
#include "qtcert/entanglement.hpp"
#include "qtcert/error.hpp"
#include "qtcert/search.hpp"

namespace qtcert {
namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::out_of_range, "resource parameter p must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_choice(const StrategyChoice &choice, const ResourceFamily &family) {
    if (choice.rule == StrategyRule::werner_optimal && family.kind != ResourceKind::werner) {
        throw Error(ErrorCode::invalid_argument, "werner-optimal rotations only apply to the werner family");
    }
    if (choice.rule == StrategyRule::explicit_strategy && !choice.rotations) {
        throw Error(ErrorCode::invalid_argument, "explicit strategy requested without rotations");
    }
}

Verdict verdict_at(MeasureId m, const ResourceFamily &family, double p, const StrategyChoice &choice,
                   const EngineOptions &options) {
    return certify(m, family, p, choice, options).verdict;
}

}  // namespace

std::string_view verdict_name(Verdict v) { return v == Verdict::quantum ? "quantum" : "classical"; }

Verdict decide(Orientation o, double average, double threshold) {
    const double margin = o == Orientation::distance_like ? threshold - average : average - threshold;
    return margin > kVerdictTieTolerance ? Verdict::quantum : Verdict::classical;
}

std::string_view strategy_name(StrategyRule rule) {
    switch (rule) {
        case StrategyRule::optimal_fidelity:
            return "optimal-fidelity";
        case StrategyRule::werner_optimal:
            return "werner-optimal";
        case StrategyRule::explicit_strategy:
            return "explicit";
    }
    return "unknown";
}

std::optional<StrategyRule> parse_strategy(std::string_view name) {
    for (auto rule : {StrategyRule::optimal_fidelity, StrategyRule::werner_optimal, StrategyRule::explicit_strategy}) {
        if (strategy_name(rule) == name) {
            return rule;
        }
    }
    return std::nullopt;
}

BobStrategy resolve_strategy(const StrategyChoice &choice, const ResourceFamily &family,
                             const TwoQubitFano &resource) {
    check_choice(choice, family);
    switch (choice.rule) {
        case StrategyRule::optimal_fidelity:
            return optimal_rotations_fidelity(resource);
        case StrategyRule::werner_optimal:
            return werner_optimal_rotations(family.bell_index);
        case StrategyRule::explicit_strategy:
            return *choice.rotations;
    }
    throw Error(ErrorCode::invalid_argument, "unknown strategy rule");
}

CertificationVerdict certify(MeasureId m, const ResourceFamily &family, double p, const StrategyChoice &choice,
                             const EngineOptions &options) {
    check_p(p);
    check_choice(choice, family);
    const TwoQubitFano resource = build_resource(family, p);
    const BobStrategy strategy = resolve_strategy(choice, family, resource);
    CertificationVerdict out;
    out.measure = m;
    out.p = p;
    out.average = average_distance(m, resource, strategy, options.quadrature_tolerance);
    out.threshold = classical_threshold(m).threshold;
    out.verdict = decide(orientation(m), out.average, out.threshold);
    return out;
}

std::vector<SweepRow> sweep(const ResourceFamily &family, std::span<const MeasureId> measures, double p_min,
                            double p_max, int steps, const StrategyChoice &choice, const EngineOptions &options) {
    if (!(p_min >= 0.0 && p_min < p_max && p_max <= 1.0)) {
        throw Error(ErrorCode::out_of_range, "sweep needs 0 <= p_min < p_max <= 1");
    }
    if (steps < 2) {
        throw Error(ErrorCode::out_of_range, "sweep needs at least two steps");
    }
    if (measures.empty()) {
        throw Error(ErrorCode::invalid_argument, "sweep needs at least one measure");
    }
    check_choice(choice, family);

    const auto n_p = static_cast<std::size_t>(steps);
    std::vector<double> grid(n_p);
    for (std::size_t k = 0; k < n_p; ++k) {
        grid[k] = p_min + (p_max - p_min) * static_cast<double>(k) / static_cast<double>(n_p - 1);
    }
    grid.back() = p_max;

    // Warm the shared caches once so workers only read them.
    for (MeasureId m : measures) {
        classical_threshold(m);
    }
    negativity_normalization(family);

    std::vector<SweepRow> rows(measures.size() * n_p);
    detail::parallel_for(rows.size(), options.threads, [&](std::size_t idx) {
        const MeasureId m = measures[idx / n_p];
        const double p = grid[idx % n_p];
        const CertificationVerdict v = certify(m, family, p, choice, options);
        rows[idx] = {family, m, p, v.average, v.threshold, v.verdict, normalized_negativity(family, p)};
    });
    return rows;
}

std::optional<double> TransitionReport::first_quantum() const {
    for (const Transition &t : transitions) {
        if (t.before == Verdict::classical && t.after == Verdict::quantum) {
            return t.p;
        }
    }
    return std::nullopt;
}

TransitionReport transition_points(MeasureId m, const ResourceFamily &family, const StrategyChoice &choice,
                                   double tol, const EngineOptions &options) {
    if (!(tol >= 1e-8)) {
        throw Error(ErrorCode::out_of_range, "transition tolerance must be at least 1e-8");
    }
    check_choice(choice, family);
    classical_threshold(m);

    const auto n = static_cast<std::size_t>(std::llround(1.0 / kTransitionScanStep)) + 1;
    auto grid_p = [n](std::size_t k) { return k + 1 == n ? 1.0 : static_cast<double>(k) * kTransitionScanStep; };

    std::vector<Verdict> verdicts(n);
    detail::parallel_for(n, options.threads,
                         [&](std::size_t k) { verdicts[k] = verdict_at(m, family, grid_p(k), choice, options); });

    std::vector<std::size_t> flips;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (verdicts[k] != verdicts[k + 1]) {
            flips.push_back(k);
        }
    }

    TransitionReport report;
    report.measure = m;
    report.tolerance = tol;
    report.transitions.resize(flips.size());
    detail::parallel_for(flips.size(), options.threads, [&](std::size_t j) {
        const std::size_t k = flips[j];
        const Verdict before = verdicts[k];
        const double p = bisect_flip(
            [&](double x) { return verdict_at(m, family, x, choice, options) != before; }, grid_p(k), grid_p(k + 1),
            tol);
        report.transitions[j] = {p, before, verdicts[k + 1]};
    });
    return report;
}

DiscrepancyResult discrepancy_interval(std::span<const TransitionReport> reports) {
    if (reports.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "discrepancy interval needs at least two measures");
    }
    DiscrepancyResult out;
    std::optional<double> lo;
    std::optional<double> hi;
    for (const TransitionReport &r : reports) {
        const auto first = r.first_quantum();
        if (!first) {
            out.excluded.push_back(r.measure);
            continue;
        }
        if (!lo || *first < *lo) {
            lo = first;
            out.earliest = r.measure;
        }
        if (!hi || *first > *hi) {
            hi = first;
            out.latest = r.measure;
        }
    }
    if (lo && hi) {
        out.interval = *hi - *lo;
    }
    return out;
}

DiscrepancyResult discrepancy_interval(const ResourceFamily &family, std::span<const MeasureId> measures,
                                       const StrategyChoice &choice, double tol, const EngineOptions &options) {
    if (measures.size() < 2) {
        throw Error(ErrorCode::invalid_argument, "discrepancy interval needs at least two measures");
    }
    std::vector<TransitionReport> reports;
    reports.reserve(measures.size());
    for (MeasureId m : measures) {
        reports.push_back(transition_points(m, family, choice, tol, options));
    }
    return discrepancy_interval(reports);
}

}  // namespace qtcert
