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

#include "qtcert/qtcert.h"

#include <cmath>
#include <cstring>
#include <array>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "qtcert/certification.hpp"
#include "qtcert/classical_mpp.hpp"
#include "qtcert/entanglement.hpp"
#include "qtcert/error.hpp"

struct qtc_engine {
    qtcert::EngineOptions options;
    std::optional<qtcert::BobStrategy> rotations;
};

struct qtc_sweep {
    std::vector<qtcert::SweepRow> rows;
};

struct qtc_transitions {
    std::vector<qtcert::TransitionReport> reports;
};

namespace {

using namespace qtcert;

thread_local std::string g_last_error;

qtc_status fail(qtc_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs fn and maps any escaping exception onto a status code.
template <typename Fn>
qtc_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        return QTC_OK;
    } catch (const Error &e) {
        return fail(static_cast<qtc_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc &) {
        return fail(QTC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(QTC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QTC_ERR_INTERNAL, "unknown failure");
    }
}

MeasureId to_measure(qtc_measure m) {
    const int i = static_cast<int>(m);
    if (i < 0 || i >= QTC_MEASURE_COUNT) {
        throw Error(ErrorCode::invalid_argument, "unknown measure id " + std::to_string(i));
    }
    return static_cast<MeasureId>(i);
}

ResourceFamily to_family(qtc_resource r) {
    const int k = static_cast<int>(r.kind);
    if (k < 0 || k > 2) {
        throw Error(ErrorCode::invalid_argument, "unknown resource kind " + std::to_string(k));
    }
    ResourceFamily f;
    f.kind = static_cast<ResourceKind>(k);
    if (f.kind == ResourceKind::werner) {
        if (r.bell_index < 1 || r.bell_index > 4) {
            throw Error(ErrorCode::out_of_range, "bell index must be 1..4");
        }
        f.bell_index = r.bell_index;
    }
    return f;
}

qtc_resource from_family(const ResourceFamily &f) {
    return {static_cast<qtc_resource_kind>(f.kind), f.bell_index};
}

const EngineOptions &options_of(const qtc_engine *engine) {
    static const EngineOptions defaults;
    return engine ? engine->options : defaults;
}

StrategyChoice to_choice(const qtc_engine *engine, qtc_strategy s) {
    StrategyChoice c;
    switch (s) {
        case QTC_STRATEGY_OPTIMAL_FIDELITY:
            c.rule = StrategyRule::optimal_fidelity;
            break;
        case QTC_STRATEGY_WERNER_OPTIMAL:
            c.rule = StrategyRule::werner_optimal;
            break;
        case QTC_STRATEGY_EXPLICIT:
            c.rule = StrategyRule::explicit_strategy;
            if (engine) {
                c.rotations = engine->rotations;
            }
            break;
        default:
            throw Error(ErrorCode::invalid_argument, "unknown strategy id");
    }
    return c;
}

std::vector<MeasureId> to_measures(const qtc_measure *measures, size_t n) {
    if (n > 0 && !measures) {
        throw Error(ErrorCode::invalid_argument, "measure list is null");
    }
    std::vector<MeasureId> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        out.push_back(to_measure(measures[i]));
    }
    return out;
}

void require(const void *ptr, const char *what) {
    if (!ptr) {
        throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
    }
}

qtc_verdict to_c(Verdict v) { return v == Verdict::quantum ? QTC_VERDICT_QUANTUM : QTC_VERDICT_CLASSICAL; }

}  // namespace

extern "C" {

QTC_API const char *qtc_version(void) { return "0.1.0"; }

QTC_API const char *qtc_last_error(void) { return g_last_error.c_str(); }

QTC_API const char *qtc_status_string(qtc_status status) {
    switch (status) {
        case QTC_OK:
            return "ok";
        case QTC_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QTC_ERR_OUT_OF_RANGE:
            return "out of range";
        case QTC_ERR_NON_PHYSICAL:
            return "non-physical state";
        case QTC_ERR_NOT_CONVERGED:
            return "not converged";
        case QTC_ERR_IO:
            return "i/o error";
        case QTC_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

QTC_API qtc_status qtc_measure_name(qtc_measure m, const char **out) {
    return guarded([&] {
        require(out, "output");
        *out = measure_name(to_measure(m)).data();
    });
}

QTC_API qtc_status qtc_measure_parse(const char *name, qtc_measure *out) {
    return guarded([&] {
        require(name, "name");
        require(out, "output");
        const auto m = parse_measure(name);
        if (!m) {
            throw Error(ErrorCode::invalid_argument, std::string("unknown measure '") + name + "'");
        }
        *out = static_cast<qtc_measure>(*m);
    });
}

QTC_API int qtc_measure_is_overlap(qtc_measure m) {
    const int i = static_cast<int>(m);
    if (i < 0 || i >= QTC_MEASURE_COUNT) {
        return 0;
    }
    return orientation(static_cast<MeasureId>(i)) == Orientation::overlap_like ? 1 : 0;
}

QTC_API qtc_status qtc_resource_name(qtc_resource_kind kind, const char **out) {
    return guarded([&] {
        require(out, "output");
        *out = resource_name(to_family({kind, 1}).kind).data();
    });
}

QTC_API qtc_status qtc_resource_parse(const char *name, qtc_resource_kind *out) {
    return guarded([&] {
        require(name, "name");
        require(out, "output");
        const auto k = parse_resource(name);
        if (!k) {
            throw Error(ErrorCode::invalid_argument, std::string("unknown resource '") + name + "'");
        }
        *out = static_cast<qtc_resource_kind>(*k);
    });
}

QTC_API qtc_status qtc_strategy_name(qtc_strategy s, const char **out) {
    return guarded([&] {
        require(out, "output");
        *out = strategy_name(to_choice(nullptr, s).rule).data();
    });
}

QTC_API qtc_status qtc_strategy_parse(const char *name, qtc_strategy *out) {
    return guarded([&] {
        require(name, "name");
        require(out, "output");
        const auto s = parse_strategy(name);
        if (!s) {
            throw Error(ErrorCode::invalid_argument, std::string("unknown strategy '") + name + "'");
        }
        *out = static_cast<qtc_strategy>(*s);
    });
}

QTC_API const char *qtc_verdict_name(qtc_verdict v) {
    return verdict_name(v == QTC_VERDICT_QUANTUM ? Verdict::quantum : Verdict::classical).data();
}

QTC_API qtc_status qtc_engine_create(qtc_engine **out) {
    return guarded([&] {
        require(out, "output");
        *out = new qtc_engine();
    });
}

QTC_API void qtc_engine_free(qtc_engine *engine) { delete engine; }

QTC_API qtc_status qtc_engine_set_quad_tol(qtc_engine *engine, double tol) {
    return guarded([&] {
        require(engine, "engine");
        if (!(std::isfinite(tol) && tol > 0.0)) {
            throw Error(ErrorCode::out_of_range, "quadrature tolerance must be positive");
        }
        engine->options.quadrature_tolerance = tol;
    });
}

QTC_API qtc_status qtc_engine_set_threads(qtc_engine *engine, unsigned threads) {
    return guarded([&] {
        require(engine, "engine");
        engine->options.threads = threads;
    });
}

QTC_API qtc_status qtc_engine_set_rotations(qtc_engine *engine, const double *rotations) {
    return guarded([&] {
        require(engine, "engine");
        require(rotations, "rotations");
        std::array<Mat3, 4> mats;
        for (std::size_t k = 0; k < 4; ++k) {
            for (std::size_t e = 0; e < 9; ++e) {
                mats[k].a[e] = rotations[9 * k + e];
            }
        }
        engine->rotations = BobStrategy(mats);
    });
}

QTC_API qtc_status qtc_classical_threshold(qtc_measure m, double *r_opt, double *threshold) {
    return guarded([&] {
        const ThresholdResult t = classical_threshold(to_measure(m));
        if (r_opt) {
            *r_opt = t.r_opt;
        }
        if (threshold) {
            *threshold = t.threshold;
        }
    });
}

QTC_API qtc_status qtc_certify(const qtc_engine *engine, qtc_measure m, qtc_resource resource, double p,
                               qtc_strategy strategy, qtc_certification *out) {
    return guarded([&] {
        require(out, "output");
        const auto v = certify(to_measure(m), to_family(resource), p, to_choice(engine, strategy), options_of(engine));
        *out = {m, v.p, v.average, v.threshold, to_c(v.verdict)};
    });
}

QTC_API qtc_status qtc_sweep_run(const qtc_engine *engine, qtc_resource resource, const qtc_measure *measures,
                                 size_t n_measures, double p_min, double p_max, int steps, qtc_strategy strategy,
                                 qtc_sweep **out) {
    return guarded([&] {
        require(out, "output");
        const auto ms = to_measures(measures, n_measures);
        auto handle = std::make_unique<qtc_sweep>();
        handle->rows = sweep(to_family(resource), ms, p_min, p_max, steps, to_choice(engine, strategy),
                             options_of(engine));
        *out = handle.release();
    });
}

QTC_API size_t qtc_sweep_size(const qtc_sweep *sweep) { return sweep ? sweep->rows.size() : 0; }

QTC_API qtc_status qtc_sweep_row_at(const qtc_sweep *sweep, size_t index, qtc_sweep_row *out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        if (index >= sweep->rows.size()) {
            throw Error(ErrorCode::out_of_range, "sweep row index out of range");
        }
        const SweepRow &r = sweep->rows[index];
        *out = {from_family(r.resource), static_cast<qtc_measure>(r.measure), r.p, r.average, r.threshold,
                to_c(r.verdict), r.negativity_normalized};
    });
}

QTC_API void qtc_sweep_free(qtc_sweep *sweep) { delete sweep; }

QTC_API qtc_status qtc_transitions_run(const qtc_engine *engine, qtc_resource resource, const qtc_measure *measures,
                                       size_t n_measures, qtc_strategy strategy, double tol, qtc_transitions **out) {
    return guarded([&] {
        require(out, "output");
        const auto ms = to_measures(measures, n_measures);
        if (ms.empty()) {
            throw Error(ErrorCode::invalid_argument, "transition report needs at least one measure");
        }
        const ResourceFamily family = to_family(resource);
        const StrategyChoice choice = to_choice(engine, strategy);
        auto handle = std::make_unique<qtc_transitions>();
        for (MeasureId m : ms) {
            handle->reports.push_back(transition_points(m, family, choice, tol, options_of(engine)));
        }
        *out = handle.release();
    });
}

QTC_API size_t qtc_transitions_measure_count(const qtc_transitions *t) { return t ? t->reports.size() : 0; }

QTC_API qtc_status qtc_transitions_measure(const qtc_transitions *t, size_t index, qtc_measure *measure,
                                           size_t *count) {
    return guarded([&] {
        require(t, "report");
        if (index >= t->reports.size()) {
            throw Error(ErrorCode::out_of_range, "measure index out of range");
        }
        if (measure) {
            *measure = static_cast<qtc_measure>(t->reports[index].measure);
        }
        if (count) {
            *count = t->reports[index].transitions.size();
        }
    });
}

QTC_API qtc_status qtc_transitions_get(const qtc_transitions *t, size_t index, size_t k, qtc_transition *out) {
    return guarded([&] {
        require(t, "report");
        require(out, "output");
        if (index >= t->reports.size() || k >= t->reports[index].transitions.size()) {
            throw Error(ErrorCode::out_of_range, "transition index out of range");
        }
        const Transition &tr = t->reports[index].transitions[k];
        *out = {tr.p, to_c(tr.before), to_c(tr.after)};
    });
}

QTC_API qtc_status qtc_transitions_first_quantum(const qtc_transitions *t, size_t index, double *p, int *found) {
    return guarded([&] {
        require(t, "report");
        require(found, "found flag");
        if (index >= t->reports.size()) {
            throw Error(ErrorCode::out_of_range, "measure index out of range");
        }
        const auto first = t->reports[index].first_quantum();
        *found = first ? 1 : 0;
        if (p) {
            *p = first.value_or(0.0);
        }
    });
}

QTC_API qtc_status qtc_transitions_discrepancy(const qtc_transitions *t, qtc_discrepancy *out) {
    return guarded([&] {
        require(t, "report");
        require(out, "output");
        const DiscrepancyResult d = discrepancy_interval(t->reports);
        qtc_discrepancy r{};
        r.interval = d.interval;
        r.has_pair = d.earliest && d.latest && d.earliest != d.latest ? 1 : 0;
        r.earliest = static_cast<qtc_measure>(d.earliest.value_or(MeasureId::trace));
        r.latest = static_cast<qtc_measure>(d.latest.value_or(MeasureId::trace));
        for (MeasureId m : d.excluded) {
            r.excluded_mask |= 1u << static_cast<unsigned>(m);
        }
        *out = r;
    });
}

QTC_API void qtc_transitions_free(qtc_transitions *t) { delete t; }

QTC_API qtc_status qtc_negativity(qtc_resource resource, double p, qtc_negativity_record *out) {
    return guarded([&] {
        require(out, "output");
        const ResourceFamily family = to_family(resource);
        const double closed = negativity_closed_form(family, p);
        out->p = p;
        out->numeric = negativity(build_resource(family, p));
        out->closed_form = closed;
        out->normalized = normalized_negativity(family, p);
    });
}

QTC_API qtc_status qtc_mc_check(const qtc_engine *engine, qtc_resource resource, double p, qtc_measure m,
                                qtc_strategy strategy, uint64_t samples, uint64_t seed, qtc_mc_record *out) {
    return guarded([&] {
        require(out, "output");
        if (samples < 1000) {
            throw Error(ErrorCode::out_of_range, "mc-check needs at least 1000 samples");
        }
        const MeasureId measure = to_measure(m);
        const ResourceFamily family = to_family(resource);
        const StrategyChoice choice = to_choice(engine, strategy);
        const CertificationVerdict v = certify(measure, family, p, choice, options_of(engine));
        const TwoQubitFano res = build_resource(family, p);
        const MonteCarloEstimate mc =
            simulate_protocol(measure, res, resolve_strategy(choice, family, res), samples, seed);
        out->quadrature = v.average;
        out->mc_mean = mc.mean;
        out->mc_std_error = mc.std_error;
        out->samples = mc.samples;
        out->pass = std::abs(v.average - mc.mean) <= 4.0 * mc.std_error + 1e-12 ? 1 : 0;
    });
}

}  // extern "C"
