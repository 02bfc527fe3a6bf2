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

#include <cmath>
#include <memory>
#include <string>

#include "qtcert/qtcert.h"

namespace {

struct EngineDeleter {
    void operator()(qtc_engine *e) const { qtc_engine_free(e); }
};
using Engine = std::unique_ptr<qtc_engine, EngineDeleter>;

Engine make_engine() {
    qtc_engine *e = nullptr;
    EXPECT_EQ(qtc_engine_create(&e), QTC_OK);
    return Engine(e);
}

const qtc_resource kWerner{QTC_RESOURCE_WERNER, 1};
const qtc_resource kAdMad{QTC_RESOURCE_AD_MAD, 1};

}  // namespace

TEST(CApi, VersionAndNames) {
    EXPECT_STREQ(qtc_version(), "0.1.0");
    const char *name = nullptr;
    ASSERT_EQ(qtc_measure_name(QTC_MEASURE_QJSD, &name), QTC_OK);
    EXPECT_STREQ(name, "qjsd");
    qtc_measure m{};
    ASSERT_EQ(qtc_measure_parse("transmission", &m), QTC_OK);
    EXPECT_EQ(m, QTC_MEASURE_TRANSMISSION);
    EXPECT_EQ(qtc_measure_parse("nope", &m), QTC_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(qtc_last_error()).find("nope"), std::string::npos);
    EXPECT_EQ(qtc_measure_name(static_cast<qtc_measure>(9), &name), QTC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(qtc_measure_is_overlap(QTC_MEASURE_AFFINITY), 1);
    EXPECT_EQ(qtc_measure_is_overlap(QTC_MEASURE_BURES), 0);

    qtc_resource_kind k{};
    ASSERT_EQ(qtc_resource_parse("ad-mad", &k), QTC_OK);
    EXPECT_EQ(k, QTC_RESOURCE_AD_MAD);
    qtc_strategy s{};
    ASSERT_EQ(qtc_strategy_parse("werner-optimal", &s), QTC_OK);
    EXPECT_EQ(s, QTC_STRATEGY_WERNER_OPTIMAL);
    EXPECT_STREQ(qtc_verdict_name(QTC_VERDICT_QUANTUM), "quantum");
    EXPECT_STREQ(qtc_status_string(QTC_ERR_OUT_OF_RANGE), "out of range");
}

TEST(CApi, NullArguments) {
    EXPECT_EQ(qtc_engine_create(nullptr), QTC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(qtc_classical_threshold(QTC_MEASURE_TRACE, nullptr, nullptr), QTC_OK);
    EXPECT_EQ(qtc_certify(nullptr, QTC_MEASURE_TRACE, kWerner, 0.5, QTC_STRATEGY_OPTIMAL_FIDELITY, nullptr),
              QTC_ERR_INVALID_ARGUMENT);
    // A null engine means default settings.
    qtc_certification c{};
    EXPECT_EQ(qtc_certify(nullptr, QTC_MEASURE_TRACE, kWerner, 0.5, QTC_STRATEGY_OPTIMAL_FIDELITY, &c), QTC_OK);
    EXPECT_NEAR(c.average, 0.25, 1e-12);
    EXPECT_EQ(qtc_certify(nullptr, QTC_MEASURE_TRACE, kWerner, 0.5, QTC_STRATEGY_EXPLICIT, &c),
              QTC_ERR_INVALID_ARGUMENT);
    qtc_engine_free(nullptr);
    qtc_sweep_free(nullptr);
    qtc_transitions_free(nullptr);
}

TEST(CApi, Thresholds) {
    double r = 0;
    double thr = 0;
    ASSERT_EQ(qtc_classical_threshold(QTC_MEASURE_FIDELITY, &r, &thr), QTC_OK);
    EXPECT_EQ(r, 1.0);
    EXPECT_NEAR(thr, 2.0 / 3.0, 1e-12);
    ASSERT_EQ(qtc_classical_threshold(QTC_MEASURE_TRACE, &r, &thr), QTC_OK);
    EXPECT_NEAR(thr, 0.4618, 5e-4);
}

TEST(CApi, CertifyAndErrors) {
    Engine e = make_engine();
    qtc_certification c{};
    ASSERT_EQ(qtc_certify(e.get(), QTC_MEASURE_FIDELITY, kWerner, 0.5, QTC_STRATEGY_OPTIMAL_FIDELITY, &c), QTC_OK);
    EXPECT_NEAR(c.average, 0.75, 1e-12);
    EXPECT_EQ(c.verdict, QTC_VERDICT_QUANTUM);

    ASSERT_EQ(qtc_certify(e.get(), QTC_MEASURE_TRACE, kWerner, 0.05, QTC_STRATEGY_OPTIMAL_FIDELITY, &c), QTC_OK);
    EXPECT_EQ(c.verdict, QTC_VERDICT_CLASSICAL);

    EXPECT_EQ(qtc_certify(e.get(), QTC_MEASURE_TRACE, kWerner, 1.5, QTC_STRATEGY_OPTIMAL_FIDELITY, &c),
              QTC_ERR_OUT_OF_RANGE);
    EXPECT_EQ(qtc_certify(e.get(), QTC_MEASURE_TRACE, kAdMad, 0.5, QTC_STRATEGY_WERNER_OPTIMAL, &c),
              QTC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(qtc_certify(e.get(), QTC_MEASURE_TRACE, kAdMad, 0.5, QTC_STRATEGY_EXPLICIT, &c),
              QTC_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(qtc_certify(e.get(), QTC_MEASURE_TRACE, qtc_resource{QTC_RESOURCE_WERNER, 5}, 0.5,
                          QTC_STRATEGY_OPTIMAL_FIDELITY, &c),
              QTC_ERR_OUT_OF_RANGE);
    EXPECT_EQ(qtc_engine_set_quad_tol(e.get(), -1.0), QTC_ERR_OUT_OF_RANGE);
}

TEST(CApi, ExplicitRotations) {
    Engine e = make_engine();
    double rot[36] = {};
    for (int k = 0; k < 4; ++k) {
        rot[9 * k] = rot[9 * k + 4] = rot[9 * k + 8] = 1.0;
    }
    ASSERT_EQ(qtc_engine_set_rotations(e.get(), rot), QTC_OK);
    qtc_certification c{};
    ASSERT_EQ(qtc_certify(e.get(), QTC_MEASURE_FIDELITY, kWerner, 1.0, QTC_STRATEGY_EXPLICIT, &c), QTC_OK);
    // Without corrections the four outcomes average out to a fidelity of 1/2.
    EXPECT_NEAR(c.average, 0.5, 1e-12);

    rot[0] = 2.0;
    EXPECT_EQ(qtc_engine_set_rotations(e.get(), rot), QTC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, SweepRows) {
    Engine e = make_engine();
    const qtc_measure ms[] = {QTC_MEASURE_FIDELITY, QTC_MEASURE_TRACE};
    qtc_sweep *s = nullptr;
    ASSERT_EQ(qtc_sweep_run(e.get(), kWerner, ms, 2, 0.0, 1.0, 5, QTC_STRATEGY_OPTIMAL_FIDELITY, &s), QTC_OK);
    ASSERT_EQ(qtc_sweep_size(s), 10u);
    qtc_sweep_row row{};
    ASSERT_EQ(qtc_sweep_row_at(s, 2, &row), QTC_OK);
    EXPECT_EQ(row.measure, QTC_MEASURE_FIDELITY);
    EXPECT_NEAR(row.p, 0.5, 1e-15);
    EXPECT_NEAR(row.average, 0.75, 1e-12);
    EXPECT_NEAR(row.negativity_normalized, 0.25, 1e-12);
    ASSERT_EQ(qtc_sweep_row_at(s, 9, &row), QTC_OK);
    EXPECT_EQ(row.measure, QTC_MEASURE_TRACE);
    EXPECT_NEAR(row.average, 0.0, 1e-12);
    EXPECT_EQ(qtc_sweep_row_at(s, 10, &row), QTC_ERR_OUT_OF_RANGE);
    qtc_sweep_free(s);

    EXPECT_EQ(qtc_sweep_run(e.get(), kWerner, ms, 2, 0.0, 1.0, 1, QTC_STRATEGY_OPTIMAL_FIDELITY, &s),
              QTC_ERR_OUT_OF_RANGE);
    EXPECT_EQ(qtc_sweep_run(e.get(), kWerner, ms, 0, 0.0, 1.0, 5, QTC_STRATEGY_OPTIMAL_FIDELITY, &s),
              QTC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, TransitionsAndDiscrepancy) {
    Engine e = make_engine();
    const qtc_measure ms[] = {QTC_MEASURE_FIDELITY, QTC_MEASURE_TRACE};
    qtc_transitions *t = nullptr;
    ASSERT_EQ(qtc_transitions_run(e.get(), kWerner, ms, 2, QTC_STRATEGY_OPTIMAL_FIDELITY, 1e-8, &t), QTC_OK);
    ASSERT_EQ(qtc_transitions_measure_count(t), 2u);
    qtc_measure m{};
    size_t count = 0;
    ASSERT_EQ(qtc_transitions_measure(t, 0, &m, &count), QTC_OK);
    EXPECT_EQ(m, QTC_MEASURE_FIDELITY);
    ASSERT_EQ(count, 1u);
    qtc_transition tr{};
    ASSERT_EQ(qtc_transitions_get(t, 0, 0, &tr), QTC_OK);
    EXPECT_NEAR(tr.p, 1.0 / 3.0, 1e-6);
    EXPECT_EQ(tr.before, QTC_VERDICT_CLASSICAL);
    EXPECT_EQ(qtc_transitions_get(t, 0, 1, &tr), QTC_ERR_OUT_OF_RANGE);

    double p = 0;
    int found = 0;
    ASSERT_EQ(qtc_transitions_first_quantum(t, 1, &p, &found), QTC_OK);
    EXPECT_EQ(found, 1);
    EXPECT_LT(p, 1.0 / 3.0);

    qtc_discrepancy d{};
    ASSERT_EQ(qtc_transitions_discrepancy(t, &d), QTC_OK);
    EXPECT_EQ(d.has_pair, 1);
    EXPECT_EQ(d.earliest, QTC_MEASURE_TRACE);
    EXPECT_EQ(d.latest, QTC_MEASURE_FIDELITY);
    EXPECT_NEAR(d.interval, 1.0 / 3.0 - p, 1e-6);
    EXPECT_EQ(d.excluded_mask, 0u);
    qtc_transitions_free(t);

    EXPECT_EQ(qtc_transitions_run(e.get(), kWerner, ms, 2, QTC_STRATEGY_OPTIMAL_FIDELITY, 1e-10, &t),
              QTC_ERR_OUT_OF_RANGE);
}

TEST(CApi, Negativity) {
    qtc_negativity_record rec{};
    ASSERT_EQ(qtc_negativity(kWerner, 1.0, &rec), QTC_OK);
    EXPECT_NEAR(rec.numeric, 0.5, 1e-12);
    EXPECT_NEAR(rec.closed_form, 0.5, 1e-15);
    EXPECT_NEAR(rec.normalized, 1.0, 1e-12);
    ASSERT_EQ(qtc_negativity(qtc_resource{QTC_RESOURCE_TWO_AD, 1}, 0.5, &rec), QTC_OK);
    EXPECT_NEAR(rec.numeric, 0.125, 1e-12);
    EXPECT_EQ(qtc_negativity(kWerner, -0.1, &rec), QTC_ERR_OUT_OF_RANGE);
}

TEST(CApi, MonteCarloCheck) {
    Engine e = make_engine();
    qtc_mc_record a{};
    qtc_mc_record b{};
    ASSERT_EQ(qtc_mc_check(e.get(), kWerner, 0.5, QTC_MEASURE_TRACE, QTC_STRATEGY_OPTIMAL_FIDELITY, 20000, 7, &a),
              QTC_OK);
    ASSERT_EQ(qtc_mc_check(e.get(), kWerner, 0.5, QTC_MEASURE_TRACE, QTC_STRATEGY_OPTIMAL_FIDELITY, 20000, 7, &b),
              QTC_OK);
    EXPECT_EQ(a.mc_mean, b.mc_mean);
    EXPECT_EQ(a.samples, 20000u);
    EXPECT_EQ(a.pass, 1);
    EXPECT_NEAR(a.quadrature, 0.25, 1e-9);
    EXPECT_EQ(qtc_mc_check(e.get(), kWerner, 0.5, QTC_MEASURE_TRACE, QTC_STRATEGY_OPTIMAL_FIDELITY, 10, 7, &a),
              QTC_ERR_OUT_OF_RANGE);
}
