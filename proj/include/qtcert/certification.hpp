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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtcert/channels.hpp"
#include "qtcert/measures.hpp"
#include "qtcert/protocol.hpp"

namespace qtcert {

enum class Verdict { classical, quantum };

std::string_view verdict_name(Verdict v);

/// Averages within this distance of the threshold do not beat it.
inline constexpr double kVerdictTieTolerance = 1e-12;

/// Quantum iff the average beats the classical threshold under the given
/// orientation by more than kVerdictTieTolerance.
Verdict decide(Orientation o, double average, double threshold);

enum class StrategyRule {
    optimal_fidelity,   // canonical-decomposition optimum for average fidelity
    werner_optimal,     // w_i w_k, Werner families only
    explicit_strategy,  // caller-supplied rotations
};

std::string_view strategy_name(StrategyRule rule);
std::optional<StrategyRule> parse_strategy(std::string_view name);

struct StrategyChoice {
    StrategyRule rule = StrategyRule::optimal_fidelity;
    std::optional<BobStrategy> rotations;  // required for explicit_strategy
};

/// Throws Error(invalid_argument) for werner_optimal on a non-Werner family
/// or explicit_strategy without rotations.
BobStrategy resolve_strategy(const StrategyChoice &choice, const ResourceFamily &family,
                             const TwoQubitFano &resource);

struct EngineOptions {
    double quadrature_tolerance = 1e-7;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct CertificationVerdict {
    MeasureId measure;
    double p;
    double average;
    double threshold;
    Verdict verdict;
};

CertificationVerdict certify(MeasureId m, const ResourceFamily &family, double p, const StrategyChoice &choice,
                             const EngineOptions &options = {});

struct SweepRow {
    ResourceFamily resource;
    MeasureId measure;
    double p;
    double average;
    double threshold;
    Verdict verdict;
    double negativity_normalized;
};

/// One row per (measure, p) on the inclusive uniform grid of `steps` points,
/// grouped by measure with p increasing. Rows are computed in parallel and
/// assembled by grid index.
std::vector<SweepRow> sweep(const ResourceFamily &family, std::span<const MeasureId> measures, double p_min,
                            double p_max, int steps, const StrategyChoice &choice, const EngineOptions &options = {});

struct Transition {
    double p;
    Verdict before;
    Verdict after;
};

struct TransitionReport {
    MeasureId measure;
    std::vector<Transition> transitions;
    double tolerance;

    /// Smallest p at which the verdict turns from classical to quantum.
    std::optional<double> first_quantum() const;
};

inline constexpr double kTransitionScanStep = 1e-3;

/// Scans p ∈ [0, 1] at kTransitionScanStep and bisects every verdict flip to
/// `tol`. Throws Error(out_of_range) for tol < 1e-8.
TransitionReport transition_points(MeasureId m, const ResourceFamily &family, const StrategyChoice &choice,
                                   double tol, const EngineOptions &options = {});

struct DiscrepancyResult {
    double interval = 0.0;
    std::optional<MeasureId> earliest;  // smallest first transition
    std::optional<MeasureId> latest;    // largest first transition
    std::vector<MeasureId> excluded;    // no classical-to-quantum transition
};

/// Largest gap between first classical-to-quantum transitions over all
/// pairs of reports. Throws Error(invalid_argument) for fewer than two.
DiscrepancyResult discrepancy_interval(std::span<const TransitionReport> reports);

DiscrepancyResult discrepancy_interval(const ResourceFamily &family, std::span<const MeasureId> measures,
                                       const StrategyChoice &choice, double tol = 1e-8,
                                       const EngineOptions &options = {});

}  // namespace qtcert
