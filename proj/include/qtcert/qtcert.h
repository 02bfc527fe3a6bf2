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

/* Public C interface of the qtcert shared library.
 *
 * Every fallible call returns a qtc_status. On failure a human readable
 * message is available from qtc_last_error() on the calling thread until the
 * next failing call on that thread. Objects behind opaque handles are owned
 * by the caller and released with the matching *_free function. */
#ifndef QTCERT_QTCERT_H
#define QTCERT_QTCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(QTCERT_BUILDING_LIBRARY)
#define QTC_API __attribute__((visibility("default")))
#else
#define QTC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qtc_status {
    QTC_OK = 0,
    QTC_ERR_INVALID_ARGUMENT = 1,
    QTC_ERR_OUT_OF_RANGE = 2,
    QTC_ERR_NON_PHYSICAL = 3,
    QTC_ERR_NOT_CONVERGED = 4,
    QTC_ERR_IO = 5,
    QTC_ERR_INTERNAL = 6
} qtc_status;

typedef enum qtc_measure {
    QTC_MEASURE_TRACE = 0,
    QTC_MEASURE_FIDELITY = 1,
    QTC_MEASURE_WOOTTERS = 2,
    QTC_MEASURE_BURES = 3,
    QTC_MEASURE_AFFINITY = 4,
    QTC_MEASURE_HELLINGER = 5,
    QTC_MEASURE_QJSD = 6,
    QTC_MEASURE_TRANSMISSION = 7
} qtc_measure;

#define QTC_MEASURE_COUNT 8

typedef enum qtc_resource_kind {
    QTC_RESOURCE_WERNER = 0,
    QTC_RESOURCE_AD_MAD = 1,
    QTC_RESOURCE_TWO_AD = 2
} qtc_resource_kind;

typedef enum qtc_strategy {
    QTC_STRATEGY_OPTIMAL_FIDELITY = 0,
    QTC_STRATEGY_WERNER_OPTIMAL = 1,
    /* Rotations supplied with qtc_engine_set_rotations. */
    QTC_STRATEGY_EXPLICIT = 2
} qtc_strategy;

typedef enum qtc_verdict { QTC_VERDICT_CLASSICAL = 0, QTC_VERDICT_QUANTUM = 1 } qtc_verdict;

typedef struct qtc_resource {
    qtc_resource_kind kind;
    int bell_index; /* 1..4, werner only; other families ignore it */
} qtc_resource;

typedef struct qtc_certification {
    qtc_measure measure;
    double p;
    double average;
    double threshold;
    qtc_verdict verdict;
} qtc_certification;

typedef struct qtc_sweep_row {
    qtc_resource resource;
    qtc_measure measure;
    double p;
    double average;
    double threshold;
    qtc_verdict verdict;
    double negativity_normalized;
} qtc_sweep_row;

typedef struct qtc_transition {
    double p;
    qtc_verdict before;
    qtc_verdict after;
} qtc_transition;

typedef struct qtc_discrepancy {
    double interval;
    int has_pair; /* 0 when fewer than two measures have a transition */
    qtc_measure earliest;
    qtc_measure latest;
    uint32_t excluded_mask; /* bit m set: measure m never turns quantum */
} qtc_discrepancy;

typedef struct qtc_negativity_record {
    double p;
    double numeric;
    double closed_form;
    double normalized;
} qtc_negativity_record;

typedef struct qtc_mc_record {
    double quadrature;
    double mc_mean;
    double mc_std_error;
    uint64_t samples;
    int pass; /* |quadrature - mc_mean| <= 4 * mc_std_error + 1e-12 */
} qtc_mc_record;

typedef struct qtc_engine qtc_engine;
typedef struct qtc_sweep qtc_sweep;
typedef struct qtc_transitions qtc_transitions;

QTC_API const char *qtc_version(void);
QTC_API const char *qtc_last_error(void);
QTC_API const char *qtc_status_string(qtc_status status);

QTC_API qtc_status qtc_measure_name(qtc_measure m, const char **out);
QTC_API qtc_status qtc_measure_parse(const char *name, qtc_measure *out);
QTC_API int qtc_measure_is_overlap(qtc_measure m);
QTC_API qtc_status qtc_resource_name(qtc_resource_kind kind, const char **out);
QTC_API qtc_status qtc_resource_parse(const char *name, qtc_resource_kind *out);
QTC_API qtc_status qtc_strategy_name(qtc_strategy s, const char **out);
QTC_API qtc_status qtc_strategy_parse(const char *name, qtc_strategy *out);
QTC_API const char *qtc_verdict_name(qtc_verdict v);

/* Engine: numerical settings shared by the evaluation calls. Defaults are
 * quadrature tolerance 1e-7 and one worker per hardware thread. Evaluation
 * calls accept a null engine and then use the defaults. */
QTC_API qtc_status qtc_engine_create(qtc_engine **out);
QTC_API void qtc_engine_free(qtc_engine *engine);
QTC_API qtc_status qtc_engine_set_quad_tol(qtc_engine *engine, double tol);
QTC_API qtc_status qtc_engine_set_threads(qtc_engine *engine, unsigned threads);
/* Four row-major 3x3 rotations, outcome 1 first (36 doubles). */
QTC_API qtc_status qtc_engine_set_rotations(qtc_engine *engine, const double *rotations);

/* Either output may be null. */
QTC_API qtc_status qtc_classical_threshold(qtc_measure m, double *r_opt, double *threshold);

QTC_API qtc_status qtc_certify(const qtc_engine *engine, qtc_measure m, qtc_resource resource, double p,
                               qtc_strategy strategy, qtc_certification *out);

QTC_API qtc_status qtc_sweep_run(const qtc_engine *engine, qtc_resource resource, const qtc_measure *measures,
                                 size_t n_measures, double p_min, double p_max, int steps, qtc_strategy strategy,
                                 qtc_sweep **out);
QTC_API size_t qtc_sweep_size(const qtc_sweep *sweep);
QTC_API qtc_status qtc_sweep_row_at(const qtc_sweep *sweep, size_t index, qtc_sweep_row *out);
QTC_API void qtc_sweep_free(qtc_sweep *sweep);

QTC_API qtc_status qtc_transitions_run(const qtc_engine *engine, qtc_resource resource, const qtc_measure *measures,
                                       size_t n_measures, qtc_strategy strategy, double tol, qtc_transitions **out);
QTC_API size_t qtc_transitions_measure_count(const qtc_transitions *t);
QTC_API qtc_status qtc_transitions_measure(const qtc_transitions *t, size_t index, qtc_measure *measure,
                                           size_t *count);
QTC_API qtc_status qtc_transitions_get(const qtc_transitions *t, size_t index, size_t k, qtc_transition *out);
/* *found is 0 when the measure never turns from classical to quantum. */
QTC_API qtc_status qtc_transitions_first_quantum(const qtc_transitions *t, size_t index, double *p, int *found);
/* Requires at least two measures in the report. */
QTC_API qtc_status qtc_transitions_discrepancy(const qtc_transitions *t, qtc_discrepancy *out);
QTC_API void qtc_transitions_free(qtc_transitions *t);

QTC_API qtc_status qtc_negativity(qtc_resource resource, double p, qtc_negativity_record *out);

/* Quadrature average against a seeded Monte-Carlo estimate. samples >= 1000. */
QTC_API qtc_status qtc_mc_check(const qtc_engine *engine, qtc_resource resource, double p, qtc_measure m,
                                qtc_strategy strategy, uint64_t samples, uint64_t seed, qtc_mc_record *out);

#ifdef __cplusplus
}
#endif

#endif /* QTCERT_QTCERT_H */
