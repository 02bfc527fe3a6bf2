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

// qtcert: teleportation certification thresholds, sweeps and cross-checks
// on the command line. Talks to the library only through qtcert.h.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "qtcert/qtcert.h"

namespace {

using qtcert_cli::Cell;
using qtcert_cli::Format;
using qtcert_cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCrossCheck = 4;

// Numeric and closed-form negativity must agree this closely.
constexpr double kNegativityAgreement = 1e-10;

struct CliError {
    int exit_code;
    std::string message;
};

struct Options {
    std::string measures = "all";
    std::string resource = "werner";
    int bell_index = 1;
    double p = 0.5;
    double p_min = 0.0;
    double p_max = 1.0;
    int steps = 101;
    std::string strategy = "optimal-fidelity";
    double tol = 1e-8;
    double quad_tol = 1e-7;
    unsigned threads = 0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "table";
};

void check(qtc_status status) {
    if (status == QTC_OK) {
        return;
    }
    const bool usage = status == QTC_ERR_INVALID_ARGUMENT || status == QTC_ERR_OUT_OF_RANGE;
    throw CliError{usage ? kExitUsage : kExitFailure, qtc_last_error()};
}

struct EngineDeleter {
    void operator()(qtc_engine *e) const { qtc_engine_free(e); }
};
struct SweepDeleter {
    void operator()(qtc_sweep *s) const { qtc_sweep_free(s); }
};
struct TransitionsDeleter {
    void operator()(qtc_transitions *t) const { qtc_transitions_free(t); }
};

std::vector<qtc_measure> parse_measures(const std::string &list) {
    std::vector<qtc_measure> out;
    if (list == "all") {
        for (int i = 0; i < QTC_MEASURE_COUNT; ++i) {
            out.push_back(static_cast<qtc_measure>(i));
        }
        return out;
    }
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        qtc_measure m;
        if (qtc_measure_parse(item.c_str(), &m) != QTC_OK) {
            throw CliError{kExitUsage, "unknown measure '" + item + "'"};
        }
        out.push_back(m);
    }
    if (out.empty()) {
        throw CliError{kExitUsage, "no measures given"};
    }
    return out;
}

qtc_resource parse_resource(const Options &o) {
    qtc_resource r{};
    if (qtc_resource_parse(o.resource.c_str(), &r.kind) != QTC_OK) {
        throw CliError{kExitUsage, "unknown resource '" + o.resource + "'"};
    }
    r.bell_index = o.bell_index;
    return r;
}

qtc_strategy parse_strategy(const Options &o) {
    qtc_strategy s;
    if (qtc_strategy_parse(o.strategy.c_str(), &s) != QTC_OK || s == QTC_STRATEGY_EXPLICIT) {
        throw CliError{kExitUsage, "unknown strategy '" + o.strategy + "'"};
    }
    return s;
}

Format parse_format(const std::string &name) {
    if (name == "table") {
        return Format::table;
    }
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "json") {
        return Format::json;
    }
    throw CliError{kExitUsage, "unknown format '" + name + "'"};
}

std::unique_ptr<qtc_engine, EngineDeleter> make_engine(const Options &o) {
    qtc_engine *raw = nullptr;
    check(qtc_engine_create(&raw));
    std::unique_ptr<qtc_engine, EngineDeleter> engine(raw);
    check(qtc_engine_set_quad_tol(engine.get(), o.quad_tol));
    check(qtc_engine_set_threads(engine.get(), o.threads));
    return engine;
}

std::string measure_text(qtc_measure m) {
    const char *name = nullptr;
    check(qtc_measure_name(m, &name));
    return name;
}

std::string resource_text(const qtc_resource &r) {
    const char *name = nullptr;
    check(qtc_resource_name(r.kind, &name));
    return name;
}

// Writes the table to --out or stdout. Summary lines go to stdout when the
// data went to a file, and to stderr when CSV data occupies stdout.
void emit(const Options &o, const Table &table, const std::vector<std::string> &summary) {
    const Format format = parse_format(o.format);
    if (!o.out.empty()) {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            throw CliError{kExitIo, "cannot open '" + o.out + "' for writing"};
        }
        table.render(file, format);
        file.flush();
        if (!file) {
            throw CliError{kExitIo, "failed writing '" + o.out + "'"};
        }
        for (const auto &line : summary) {
            std::cout << line << '\n';
        }
        return;
    }
    table.render(std::cout, format);
    std::ostream &side = format == Format::table ? std::cout : std::cerr;
    for (const auto &line : summary) {
        side << line << '\n';
    }
}

int cmd_thresholds(const Options &o) {
    Table table({"measure", "r_opt", "threshold"});
    for (qtc_measure m : parse_measures(o.measures)) {
        double r_opt = 0.0;
        double threshold = 0.0;
        check(qtc_classical_threshold(m, &r_opt, &threshold));
        table.add({measure_text(m), r_opt, threshold});
    }
    emit(o, table, {});
    return kExitOk;
}

int cmd_sweep(const Options &o) {
    const auto measures = parse_measures(o.measures);
    const qtc_resource resource = parse_resource(o);
    const qtc_strategy strategy = parse_strategy(o);
    parse_format(o.format);
    auto engine = make_engine(o);
    qtc_sweep *raw = nullptr;
    check(qtc_sweep_run(engine.get(), resource, measures.data(), measures.size(), o.p_min, o.p_max, o.steps,
                        strategy, &raw));
    std::unique_ptr<qtc_sweep, SweepDeleter> sweep(raw);

    Table table({"resource", "measure", "p", "average", "threshold", "verdict", "negativity_normalized"});
    long long quantum = 0;
    const std::size_t n = qtc_sweep_size(sweep.get());
    for (std::size_t i = 0; i < n; ++i) {
        qtc_sweep_row row;
        check(qtc_sweep_row_at(sweep.get(), i, &row));
        quantum += row.verdict == QTC_VERDICT_QUANTUM ? 1 : 0;
        table.add({resource_text(row.resource), measure_text(row.measure), row.p, row.average, row.threshold,
                   std::string(qtc_verdict_name(row.verdict)), row.negativity_normalized});
    }
    emit(o, table,
         {"rows: " + std::to_string(n), "quantum: " + std::to_string(quantum),
          "classical: " + std::to_string(static_cast<long long>(n) - quantum)});
    return kExitOk;
}

int cmd_transitions(const Options &o) {
    const auto measures = parse_measures(o.measures);
    const qtc_resource resource = parse_resource(o);
    const qtc_strategy strategy = parse_strategy(o);
    parse_format(o.format);
    auto engine = make_engine(o);
    qtc_transitions *raw = nullptr;
    check(qtc_transitions_run(engine.get(), resource, measures.data(), measures.size(), strategy, o.tol, &raw));
    std::unique_ptr<qtc_transitions, TransitionsDeleter> report(raw);

    Table table({"resource", "measure", "p", "before", "after"});
    std::vector<std::string> summary;
    for (std::size_t i = 0; i < qtc_transitions_measure_count(report.get()); ++i) {
        qtc_measure m;
        std::size_t count = 0;
        check(qtc_transitions_measure(report.get(), i, &m, &count));
        for (std::size_t k = 0; k < count; ++k) {
            qtc_transition t;
            check(qtc_transitions_get(report.get(), i, k, &t));
            table.add({resource_text(resource), measure_text(m), t.p, std::string(qtc_verdict_name(t.before)),
                       std::string(qtc_verdict_name(t.after))});
        }
        double first = 0.0;
        int found = 0;
        check(qtc_transitions_first_quantum(report.get(), i, &first, &found));
        summary.push_back("first_quantum " + measure_text(m) + ": " +
                          (found ? qtcert_cli::format_number(first, 12) : std::string("none")));
    }
    if (measures.size() >= 2) {
        qtc_discrepancy d;
        check(qtc_transitions_discrepancy(report.get(), &d));
        std::string line = "discrepancy: " + qtcert_cli::format_number(d.interval, 12);
        if (d.has_pair) {
            line += " (" + measure_text(d.earliest) + " to " + measure_text(d.latest) + ")";
        }
        summary.push_back(line);
        for (int m = 0; m < QTC_MEASURE_COUNT; ++m) {
            if (d.excluded_mask & (1u << m)) {
                summary.push_back("warning: " + measure_text(static_cast<qtc_measure>(m)) +
                                  " never turns quantum and is excluded from the discrepancy");
            }
        }
    }
    emit(o, table, summary);
    return kExitOk;
}

int cmd_certify(const Options &o) {
    const auto measures = parse_measures(o.measures);
    const qtc_resource resource = parse_resource(o);
    const qtc_strategy strategy = parse_strategy(o);
    parse_format(o.format);
    auto engine = make_engine(o);
    Table table({"resource", "measure", "p", "average", "threshold", "verdict"});
    for (qtc_measure m : measures) {
        qtc_certification c;
        check(qtc_certify(engine.get(), m, resource, o.p, strategy, &c));
        table.add({resource_text(resource), measure_text(m), c.p, c.average, c.threshold,
                   std::string(qtc_verdict_name(c.verdict))});
    }
    emit(o, table, {});
    return kExitOk;
}

int cmd_negativity(const Options &o) {
    const qtc_resource resource = parse_resource(o);
    parse_format(o.format);
    if (!(o.p_min >= 0.0 && o.p_min < o.p_max && o.p_max <= 1.0) || o.steps < 2) {
        throw CliError{kExitUsage, "negativity needs 0 <= p-min < p-max <= 1 and steps >= 2"};
    }
    Table table({"resource", "p", "negativity", "closed_form", "normalized"});
    double worst = 0.0;
    for (int k = 0; k < o.steps; ++k) {
        const double p = k + 1 == o.steps ? o.p_max : o.p_min + (o.p_max - o.p_min) * k / (o.steps - 1);
        qtc_negativity_record rec;
        check(qtc_negativity(resource, p, &rec));
        worst = std::max(worst, std::abs(rec.numeric - rec.closed_form));
        table.add({resource_text(resource), rec.p, rec.numeric, rec.closed_form, rec.normalized});
    }
    const bool agree = worst <= kNegativityAgreement;
    emit(o, table, {"max |numeric - closed_form|: " + qtcert_cli::format_number(worst, 6),
                    std::string("cross-check: ") + (agree ? "pass" : "fail")});
    return agree ? kExitOk : kExitCrossCheck;
}

int cmd_mc_check(const Options &o) {
    const auto measures = parse_measures(o.measures);
    const qtc_resource resource = parse_resource(o);
    const qtc_strategy strategy = parse_strategy(o);
    parse_format(o.format);
    auto engine = make_engine(o);
    Table table({"resource", "measure", "p", "quadrature", "mc_mean", "mc_std_error", "samples", "pass"});
    bool all_pass = true;
    for (qtc_measure m : measures) {
        qtc_mc_record rec;
        check(qtc_mc_check(engine.get(), resource, o.p, m, strategy, o.samples, o.seed, &rec));
        all_pass = all_pass && rec.pass;
        table.add({resource_text(resource), measure_text(m), o.p, rec.quadrature, rec.mc_mean, rec.mc_std_error,
                   static_cast<long long>(rec.samples), rec.pass != 0});
    }
    emit(o, table, {std::string("cross-check: ") + (all_pass ? "pass" : "fail")});
    return all_pass ? kExitOk : kExitCrossCheck;
}

double default_quad_tol() {
    const char *env = std::getenv("QTCERT_QUAD_TOL");
    if (!env || !*env) {
        return 1e-7;
    }
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (*end != '\0' || !(std::isfinite(v) && v > 0.0)) {
        throw CliError{kExitUsage, std::string("QTCERT_QUAD_TOL is not a positive number: ") + env};
    }
    return v;
}

}  // namespace

int main(int argc, char **argv) {
    Options o;
    try {
        o.quad_tol = default_quad_tol();
    } catch (const CliError &e) {
        std::cerr << "qtcert: " << e.message << '\n';
        return e.exit_code;
    }

    CLI::App app{"Teleportation certification with classical thresholds over several distinguishability measures"};
    app.require_subcommand(1);

    auto common = [&o](CLI::App *sub) {
        sub->add_option("--measures", o.measures, "Comma-separated measure ids or 'all'");
        sub->add_option("--format", o.format, "table, csv or json");
        sub->add_option("--out", o.out, "Write records to this path instead of stdout");
    };
    auto resource_opts = [&o](CLI::App *sub) {
        sub->add_option("--resource", o.resource, "werner, ad-mad or two-ad");
        sub->add_option("--bell-index", o.bell_index, "Bell state of the Werner family (1..4)");
    };
    auto engine_opts = [&o](CLI::App *sub) {
        sub->add_option("--strategy", o.strategy, "optimal-fidelity or werner-optimal");
        sub->add_option("--quad-tol", o.quad_tol, "Sphere quadrature tolerance (default from QTCERT_QUAD_TOL or 1e-7)");
        sub->add_option("--threads", o.threads, "Worker threads (0: all hardware threads)");
    };
    auto grid_opts = [&o](CLI::App *sub) {
        sub->add_option("--p-min", o.p_min, "Lower end of the p grid");
        sub->add_option("--p-max", o.p_max, "Upper end of the p grid");
        sub->add_option("--steps", o.steps, "Grid points including both ends");
    };

    auto *thresholds = app.add_subcommand("thresholds", "Classical measure-and-prepare thresholds");
    common(thresholds);

    auto *sweep = app.add_subcommand("sweep", "Certification verdicts over a p grid");
    common(sweep);
    resource_opts(sweep);
    engine_opts(sweep);
    grid_opts(sweep);

    auto *transitions = app.add_subcommand("transitions", "Verdict flips in p and the discrepancy interval");
    common(transitions);
    resource_opts(transitions);
    engine_opts(transitions);
    transitions->add_option("--tol", o.tol, "Bisection tolerance (>= 1e-8)");

    auto *certify = app.add_subcommand("certify", "Verdicts at a single p");
    common(certify);
    resource_opts(certify);
    engine_opts(certify);
    certify->add_option("--p", o.p, "Resource noise parameter");

    auto *negativity = app.add_subcommand("negativity", "Negativity curve against the closed forms");
    negativity->add_option("--format", o.format, "table, csv or json");
    negativity->add_option("--out", o.out, "Write records to this path instead of stdout");
    resource_opts(negativity);
    grid_opts(negativity);

    auto *mc_check = app.add_subcommand("mc-check", "Quadrature average against a Monte-Carlo estimate");
    common(mc_check);
    resource_opts(mc_check);
    engine_opts(mc_check);
    mc_check->add_option("--p", o.p, "Resource noise parameter");
    mc_check->add_option("--samples", o.samples, "Monte-Carlo samples (>= 1000)");
    mc_check->add_option("--seed", o.seed, "Monte-Carlo seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (thresholds->parsed()) {
            return cmd_thresholds(o);
        }
        if (sweep->parsed()) {
            return cmd_sweep(o);
        }
        if (transitions->parsed()) {
            return cmd_transitions(o);
        }
        if (certify->parsed()) {
            return cmd_certify(o);
        }
        if (negativity->parsed()) {
            return cmd_negativity(o);
        }
        return cmd_mc_check(o);
    } catch (const CliError &e) {
        std::cerr << "qtcert: " << e.message << '\n';
        return e.exit_code;
    }
}
