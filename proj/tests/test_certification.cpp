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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qtcert/certification.hpp"
#include "qtcert/classical_mpp.hpp"
#include "qtcert/error.hpp"

using namespace qtcert;

namespace {

const ResourceFamily kWerner{ResourceKind::werner, 1};
const ResourceFamily kAdMad{ResourceKind::ad_mad, 1};
const ResourceFamily kTwoAd{ResourceKind::two_ad, 1};
const StrategyChoice kOptimal{};

// Closed-form first quantum transition for Werner: the trace average is
// (1 - p)/2, fidelity (1 + p)/2.
double trace_transition() { return 1.0 - 2.0 * classical_threshold(MeasureId::trace).threshold; }

}  // namespace

TEST(Decide, OrientationAndTies) {
    EXPECT_EQ(decide(Orientation::distance_like, 0.4, 0.46), Verdict::quantum);
    EXPECT_EQ(decide(Orientation::distance_like, 0.5, 0.46), Verdict::classical);
    EXPECT_EQ(decide(Orientation::overlap_like, 0.75, 2.0 / 3.0), Verdict::quantum);
    EXPECT_EQ(decide(Orientation::overlap_like, 2.0 / 3.0, 2.0 / 3.0), Verdict::classical);
    EXPECT_EQ(decide(Orientation::distance_like, 0.5 - 1e-13, 0.5), Verdict::classical);
}

TEST(Decide, FlippingOrientationFlipsEveryStrictVerdict) {
    for (int i = 0; i < 100; ++i) {
        const double avg = 0.01 * i;
        const double thr = 0.5;
        if (std::abs(avg - thr) <= kVerdictTieTolerance) {
            continue;
        }
        EXPECT_NE(decide(Orientation::distance_like, avg, thr), decide(Orientation::overlap_like, avg, thr));
    }
}

TEST(Strategy, NamesAndResolution) {
    for (auto r : {StrategyRule::optimal_fidelity, StrategyRule::werner_optimal, StrategyRule::explicit_strategy}) {
        EXPECT_EQ(parse_strategy(strategy_name(r)), r);
    }
    EXPECT_FALSE(parse_strategy("greedy").has_value());
    const TwoQubitFano am = build_resource(kAdMad, 0.5);
    EXPECT_THROW(resolve_strategy({StrategyRule::werner_optimal, {}}, kAdMad, am), Error);
    EXPECT_THROW(resolve_strategy({StrategyRule::explicit_strategy, {}}, kAdMad, am), Error);
    const BobStrategy mine = werner_optimal_rotations(2);
    EXPECT_EQ(resolve_strategy({StrategyRule::explicit_strategy, mine}, kAdMad, am).rotation(3), mine.rotation(3));
}

TEST(Certify, Examples) {
    const auto f = certify(MeasureId::fidelity, kWerner, 0.5, kOptimal);
    EXPECT_NEAR(f.average, 0.75, 1e-12);
    EXPECT_EQ(f.verdict, Verdict::quantum);

    const auto t1 = certify(MeasureId::trace, kWerner, 0.05, kOptimal);
    EXPECT_NEAR(t1.average, 0.475, 1e-12);
    EXPECT_EQ(t1.verdict, Verdict::classical);

    const auto t2 = certify(MeasureId::trace, kWerner, 0.2, {StrategyRule::werner_optimal, {}});
    EXPECT_NEAR(t2.average, 0.4, 1e-12);
    EXPECT_EQ(t2.verdict, Verdict::quantum);
    EXPECT_NEAR(t2.threshold, classical_threshold(MeasureId::trace).threshold, 0.0);

    EXPECT_THROW(certify(MeasureId::trace, kWerner, 1.2, kOptimal), Error);
    EXPECT_THROW(certify(MeasureId::trace, kTwoAd, 0.5, {StrategyRule::werner_optimal, {}}), Error);
}

TEST(Sweep, GridAndRows) {
    const std::vector<MeasureId> fid{MeasureId::fidelity};
    const auto rows = sweep(kWerner, fid, 0.0, 1.0, 3, kOptimal);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_NEAR(rows[0].average, 0.5, 1e-12);
    EXPECT_NEAR(rows[1].average, 0.75, 1e-12);
    EXPECT_NEAR(rows[2].average, 1.0, 1e-12);
    EXPECT_EQ(rows[2].p, 1.0);
    EXPECT_NEAR(rows[2].negativity_normalized, 1.0, 1e-12);

    const auto all = sweep(kWerner, kAllMeasures, 0.0, 1.0, 11, kOptimal);
    ASSERT_EQ(all.size(), 88u);
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i].measure, kAllMeasures[i / 11]);
        if (i % 11) {
            EXPECT_GT(all[i].p, all[i - 1].p);
        }
        EXPECT_TRUE(std::isfinite(all[i].average));
        EXPECT_TRUE(std::isfinite(all[i].negativity_normalized));
    }

    EXPECT_THROW(sweep(kWerner, fid, 0.5, 0.5, 3, kOptimal), Error);
    EXPECT_THROW(sweep(kWerner, fid, 0.0, 1.0, 1, kOptimal), Error);
    EXPECT_THROW(sweep(kWerner, fid, -0.1, 1.0, 3, kOptimal), Error);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
    const std::vector<MeasureId> ms{MeasureId::qjsd, MeasureId::bures};
    EngineOptions one;
    one.threads = 1;
    EngineOptions four;
    four.threads = 4;
    const auto a = sweep(kAdMad, ms, 0.1, 0.9, 9, kOptimal, one);
    const auto b = sweep(kAdMad, ms, 0.1, 0.9, 9, kOptimal, four);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].average, b[i].average);
        EXPECT_EQ(a[i].p, b[i].p);
    }
}

TEST(Sweep, TwoAdFidelityIsAlwaysQuantum) {
    const std::vector<MeasureId> fid{MeasureId::fidelity};
    for (const auto &row : sweep(kTwoAd, fid, 0.005, 1.0, 200, kOptimal)) {
        EXPECT_EQ(row.verdict, Verdict::quantum) << row.p;
        EXPECT_NEAR(row.average, (2 + row.p * row.p) / 3, 1e-9);
    }
}

TEST(Sweep, WernerDistanceAveragesAreMonotone) {
    std::vector<MeasureId> distances;
    for (MeasureId m : kAllMeasures) {
        if (orientation(m) == Orientation::distance_like) {
            distances.push_back(m);
        }
    }
    const auto rows = sweep(kWerner, distances, 0.0, 1.0, 200, kOptimal);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].measure == rows[i - 1].measure) {
            EXPECT_LE(rows[i].average, rows[i - 1].average + 1e-9) << measure_name(rows[i].measure);
        }
    }
}

TEST(Transitions, WernerFidelityAndTrace) {
    const auto f = transition_points(MeasureId::fidelity, kWerner, kOptimal, 1e-8);
    ASSERT_EQ(f.transitions.size(), 1u);
    EXPECT_NEAR(f.transitions[0].p, 1.0 / 3.0, 1e-6);
    EXPECT_EQ(f.transitions[0].before, Verdict::classical);
    EXPECT_EQ(f.transitions[0].after, Verdict::quantum);
    EXPECT_EQ(f.first_quantum(), f.transitions[0].p);

    const auto t = transition_points(MeasureId::trace, kWerner, kOptimal, 1e-8);
    ASSERT_EQ(t.transitions.size(), 1u);
    EXPECT_NEAR(t.transitions[0].p, trace_transition(), 1e-7);
    EXPECT_LT(t.transitions[0].p, 1.0 / 3.0);

    EXPECT_THROW(transition_points(MeasureId::trace, kWerner, kOptimal, 1e-9), Error);
}

TEST(Transitions, AdMadBures) {
    const auto r = transition_points(MeasureId::bures, kAdMad, kOptimal, 1e-6);
    ASSERT_TRUE(r.first_quantum().has_value());
    bool found = false;
    for (const auto &t : r.transitions) {
        found = found || std::abs(t.p - 0.49845) < 1e-3;
    }
    EXPECT_TRUE(found);
}

TEST(Discrepancy, FromReports) {
    TransitionReport a{MeasureId::trace, {{0.1, Verdict::classical, Verdict::quantum}}, 1e-8};
    TransitionReport b{MeasureId::bures, {{0.4, Verdict::classical, Verdict::quantum}}, 1e-8};
    TransitionReport c{MeasureId::qjsd, {{0.3, Verdict::quantum, Verdict::classical}}, 1e-8};
    const std::vector<TransitionReport> reports{a, b, c};
    const auto d = discrepancy_interval(reports);
    EXPECT_NEAR(d.interval, 0.3, 1e-15);
    EXPECT_EQ(d.earliest, MeasureId::trace);
    EXPECT_EQ(d.latest, MeasureId::bures);
    ASSERT_EQ(d.excluded.size(), 1u);
    EXPECT_EQ(d.excluded[0], MeasureId::qjsd);

    const std::vector<TransitionReport> single{a};
    EXPECT_THROW(discrepancy_interval(single), Error);
    const std::vector<MeasureId> one{MeasureId::trace};
    EXPECT_THROW(discrepancy_interval(kWerner, one, kOptimal), Error);
}

TEST(Discrepancy, WernerTraceBures) {
    const std::vector<MeasureId> ms{MeasureId::trace, MeasureId::bures};
    const auto d = discrepancy_interval(kWerner, ms, kOptimal, 1e-8);
    // Bures of a (1+p)/2 fidelity against 128√2/315, trace against (1-p)/2.
    const double f = std::pow(1 - std::pow(128 * std::sqrt(2.0) / 315, 2) / 2, 2);
    const double p_bures = 2 * f - 1;
    EXPECT_NEAR(d.interval, p_bures - trace_transition(), 1e-6);
    EXPECT_NEAR(d.interval, 0.3176, 5e-4);
}
