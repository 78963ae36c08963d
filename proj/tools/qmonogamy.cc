// Copyright 2026 The qmonogamy Authors
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

// qmonogamy: correlation reports, parameter sweeps, GHZ/W classification
// and identity verification suites for small multipartite states.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qmono/app/format.h"
#include "qmono/app/report_json.h"
#include "qmono/app/state_selector.h"
#include "qmono/app/sweep.h"
#include "qmono/app/verify.h"
#include "qmono/errors.h"
#include "qmono/monogamy.h"

namespace {

using namespace qmono;
using app::Json;

constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitClassify = 4;
constexpr int kExitSuite = 5;

// Raised for failures that map to a specific exit code.
struct ExitError {
    int code;
    std::string message;
};

struct Globals {
    uint64_t seed = OptimizerOptions{}.seed;
    bool seed_set = false;
    std::string out;
    std::string format;
    std::optional<double> tol;
    unsigned threads = 1;
};

DensityMatrix load_state_selector(const std::string &selector, size_t default_qubits = 3) {
    try {
        return app::parse_state_selector(selector, default_qubits);
    } catch (const Error &e) {
        throw ExitError{kExitParse, e.what()};
    }
}

void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f || !(f << text)) {
        throw ExitError{kExitParse, "cannot write " + g.out};
    }
}

void flatten(const Json &j, const std::string &prefix, std::string &out) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); i++) {
            flatten(j[i], prefix + "." + std::to_string(i), out);
        }
    } else if (j.is_number_float()) {
        out += prefix + "," + app::format_number(j.get<double>()) + "\n";
    } else {
        out += prefix + "," + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

void emit_json(const Globals &g, const Json &j) {
    if (g.format == "csv") {
        std::string out = "key,value\n";
        flatten(j, "", out);
        emit(g, out);
    } else {
        emit(g, app::dump(j));
    }
}

OptimizerOptions optimizer(const Globals &g) {
    OptimizerOptions o;
    o.seed = g.seed;
    return o;
}

int cmd_measure(const Globals &g, const std::string &selector) {
    DensityMatrix rho = load_state_selector(selector);
    if (rho.dims().size() > 4) {
        throw ExitError{kExitParse, "measure supports at most four parties"};
    }
    OptimizerOptions o = optimizer(g);
    Json j;
    j["state"] = selector;
    j["report"] = app::to_json(correlation_report(rho, o));
    if (rho.dims().size() == 3) {
        Json deficits = Json::array();
        for (const auto &label : rho.labels()) {
            if (rho.dims().dim_of(label) == 2) {
                deficits.push_back(app::to_json(deficit_report(rho, label, o)));
            }
        }
        j["deficits"] = deficits;
    }
    emit_json(g, j);
    return 0;
}

int cmd_sweep(const Globals &g, app::SweepOptions s) {
    s.threads = g.threads;
    s.optimizer = optimizer(g);
    std::vector<app::SweepRow> rows;
    try {
        rows = app::run_sweep(s);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::OutOfRange) {
            throw ExitError{kExitParse, e.what()};
        }
        throw;
    }
    if (g.format == "json") {
        Json j;
        Json arr = Json::array();
        for (const auto &r : rows) {
            arr.push_back(Json{{"p", app::round12(r.p)},
                               {"eps", app::round12(r.eps)},
                               {"delta_right_A", app::round12(r.delta_right_A)},
                               {"delta_left_A", app::round12(r.delta_left_A)},
                               {"D_pairs", app::round12(r.D_pairs)},
                               {"E_BC", app::round12(r.E_BC)},
                               {"route", r.route},
                               {"optimizer_spread", app::round12(r.optimizer_spread)}});
        }
        j["rows"] = arr;
        Json stars = Json::array();
        for (double e : s.eps) {
            auto p = app::critical_point(rows, e);
            stars.push_back(Json{{"eps", app::round12(e)}, {"p_star", p ? Json(app::round12(*p)) : Json(nullptr)}});
        }
        j["critical_points"] = stars;
        emit(g, app::dump(j));
    } else {
        emit(g, app::sweep_csv(rows, s));
    }
    return 0;
}

int cmd_classify(const Globals &g, const std::string &selector) {
    DensityMatrix rho = load_state_selector(selector);
    ClassificationResult c;
    try {
        c = classify_ghz_w(rho);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::NotPure || e.code() == ErrorCode::WrongArity) {
            throw ExitError{kExitClassify, e.what()};
        }
        throw;
    }
    if (g.format == "json" || g.format == "csv") {
        emit_json(g, app::to_json(c));
    } else {
        std::string line = std::string(classification_name(c.verdict)) +
                           " delta_left_C=" + app::format_number(c.delta_left_c);
        if (c.boundary) {
            line += " boundary";
        }
        emit(g, line + "\n");
    }
    return 0;
}

int cmd_verify(const Globals &g, const std::string &suite, size_t samples, const std::string &state) {
    app::VerifyOptions v;
    auto s = app::parse_suite(suite);
    if (!s) {
        throw ExitError{kExitParse, "unknown suite '" + suite + "'"};
    }
    v.suite = *s;
    v.samples = samples;
    if (samples < 1) {
        throw ExitError{kExitParse, "--n must be at least 1"};
    }
    if (g.seed_set) {
        v.seed = g.seed;
    }
    v.tolerance_override = g.tol;
    v.threads = g.threads;
    v.optimizer = optimizer(g);
    if (!state.empty()) {
        load_state_selector(state);
        v.state_selector = state;
    }
    app::VerifyReport report = app::run_verify(v);
    if (g.format == "csv") {
        std::string out = "identity,max_residual,mean_residual,tolerance,samples,pass\n";
        for (const auto &id : report.identities) {
            out += id.name + "," + app::format_number(id.max_residual) + "," +
                   app::format_number(id.mean_residual) + "," + app::format_number(id.tolerance) + "," +
                   std::to_string(id.samples) + "," + (id.pass ? "true" : "false") + "\n";
        }
        if (g.tol) {
            out += "# tolerance_override " + app::format_number(*g.tol) + "\n";
        }
        emit(g, out);
    } else {
        emit(g, app::dump(app::to_json(report)));
    }
    if (!report.pass) {
        std::cerr << "verify: at least one identity exceeded its tolerance\n";
        return kExitSuite;
    }
    return 0;
}

int cmd_npartite(const Globals &g, const std::string &selector) {
    DensityMatrix psi = load_state_selector(selector, 4);
    OptimizerOptions o = optimizer(g);
    const std::string &anchor = psi.labels()[0];
    Json j;
    j["state"] = selector;
    j["anchor"] = anchor;
    j["parties"] = psi.dims().size();
    j["delta_right"] = app::round12(deficit_right_npartite(psi, anchor, o));
    j["recursion_right"] = app::to_json(check_recursion_right(psi, o));
    j["recursion_left"] = app::to_json(check_recursion_left(psi, o));
    emit_json(g, j);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App cli{"Quantum correlation and monogamy-deficit toolkit"};
    cli.require_subcommand(1);
    cli.fallthrough();
    Globals g;
    uint64_t seed = 0;
    double tol = 0;
    auto *seed_opt = cli.add_option("--seed", seed, "Seed for sampling and optimizer restarts");
    cli.add_option("--out", g.out, "Write output to this file instead of stdout");
    cli.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    auto *tol_opt = cli.add_option("--tol", tol, "Override every identity tolerance")->check(CLI::PositiveNumber);
    cli.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    std::string selector;
    auto *measure = cli.add_subcommand("measure", "Correlation report for one state (JSON)");
    measure->add_option("state", selector, "State selector")->required();

    app::SweepOptions sweep_opts;
    auto *sweep = cli.add_subcommand("sweep", "Deficits along the psi-tilde(p, eps) family (CSV)");
    sweep->add_option("--eps", sweep_opts.eps, "eps values")->delimiter(',');
    sweep->add_option("--p-start", sweep_opts.p_start, "First p");
    sweep->add_option("--p-end", sweep_opts.p_end, "Last p");
    sweep->add_option("--p-step", sweep_opts.p_step, "Grid step");

    auto *classify = cli.add_subcommand("classify", "GHZ/W class of a pure three-qubit state");
    classify->add_option("state", selector, "State selector")->required();

    std::string suite;
    size_t samples = 20;
    std::string verify_state;
    auto *verify = cli.add_subcommand("verify", "Run an identity suite (JSON)");
    verify->add_option("suite", suite, "tripartite, npartite, workdeficit or all")->required();
    verify->add_option("--n", samples, "Samples per suite");
    verify->add_option("--state", verify_state, "Use this state instead of random samples");

    auto *npart = cli.add_subcommand("npartite", "N-partite deficit and recursion checks (JSON)");
    npart->add_option("state", selector, "State selector (four qubits by default)")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return cli.exit(e);
    } catch (const CLI::ParseError &e) {
        cli.exit(e);
        return kExitParse;
    }
    g.seed_set = seed_opt->count() > 0;
    if (g.seed_set) {
        g.seed = seed;
    }
    if (tol_opt->count() > 0) {
        g.tol = tol;
    }

    try {
        if (*measure) {
            return cmd_measure(g, selector);
        }
        if (*sweep) {
            return cmd_sweep(g, sweep_opts);
        }
        if (*classify) {
            return cmd_classify(g, selector);
        }
        if (*verify) {
            return cmd_verify(g, suite, samples, verify_state);
        }
        return cmd_npartite(g, selector);
    } catch (const ExitError &e) {
        std::cerr << "qmonogamy: " << e.message << "\n";
        return e.code;
    } catch (const Error &e) {
        std::cerr << "qmonogamy: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception &e) {
        std::cerr << "qmonogamy: " << e.what() << "\n";
        return kExitNumeric;
    }
}
