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

#include "qmono/app/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "qmono/app/parallel.h"
#include "qmono/app/state_selector.h"
#include "qmono/errors.h"
#include "qmono/monogamy.h"
#include "qmono/states.h"

namespace qmono::app {

namespace {

constexpr std::array<double, 3> kMixWeights = {0.1, 0.5, 0.9};

// residuals[sample][identity]
using Table = std::vector<std::vector<double>>;

struct Section {
    std::vector<std::pair<std::string, double>> identities;
    Table residuals;
    std::vector<double> spreads;
};

void run_section(Section &section, size_t samples, unsigned threads,
                 const std::function<void(size_t, std::vector<double> &, double &)> &body) {
    section.residuals.assign(samples, std::vector<double>(section.identities.size(), 0.0));
    section.spreads.assign(samples, 0.0);
    parallel_for(samples, threads, [&](size_t i) { body(i, section.residuals[i], section.spreads[i]); });
}

DensityMatrix sample_state(const VerifyOptions &o, size_t qubits, size_t index) {
    if (o.state_selector) {
        DensityMatrix rho = parse_state_selector(*o.state_selector, qubits);
        if (rho.dims().size() != qubits) {
            throw Error(ErrorCode::WrongArity, "suite needs a " + std::to_string(qubits) + "-party state");
        }
        return rho;
    }
    return haar_random_pure(DimensionList::qubits(qubits), sample_seed(o.seed, index)).density();
}

Section tripartite(const VerifyOptions &o) {
    Section s;
    s.identities = {{"left_from_right", tolerance::kIdentity},
                    {"right_from_left", tolerance::kIdentity},
                    {"deficit_difference", tolerance::kDifference},
                    {"lami_limi", tolerance::kIdentity},
                    {"average_correlations", tolerance::kIdentity},
                    {"route_agreement", tolerance::kRouteAgreement},
                    {"koashi_winter", tolerance::kIdentity},
                    {"interrogated_cmi_eof", tolerance::kDifference},
                    {"squashed_eof", tolerance::kSquashed},
                    {"interaction_decomposition_mixed", tolerance::kDecomposition}};
    run_section(s, o.samples, o.threads, [&](size_t i, std::vector<double> &r, double &spread) {
        DensityMatrix psi = sample_state(o, 3, i);
        TripartiteAnalysis t = analyze_tripartite(psi, o.optimizer);
        for (size_t a = 0; a < 3; a++) {
            r[0] = std::max(r[0], residual_left_from_right(t, a));
            r[1] = std::max(r[1], residual_right_from_left(t, a));
            r[2] = std::max(r[2], residual_deficit_difference(t, a));
            auto [first, second] = residual_lami_limi(t, a);
            r[3] = std::max({r[3], first, second});
            r[4] = std::max(r[4], residual_average_correlations(t, a));
            r[5] = std::max({r[5], std::abs(t.delta_left(a) - t.delta_left_closed(a)),
                             std::abs(t.delta_right(a) - t.delta_right_closed(a))});
        }
        const auto &l = t.labels;
        InterrogatedTerms terms = interrogated_terms(psi, l[0], o.optimizer);
        double e_bc = t.eof[1][2];
        r[6] = std::abs(e_bc - terms.given_b.value);
        r[7] = std::abs(e_bc - interrogated_cmi(terms) / 2);
        r[8] = std::abs(t.delta_left_closed(2) - t.delta_left(2));
        DensityMatrix mixed = mix_with_identity(psi, kMixWeights[i % kMixWeights.size()]);
        r[9] = interaction_decomposition_residual(mixed, l[0], o.optimizer);
        spread = t.max_spread();
    });
    return s;
}

Section npartite(const VerifyOptions &o) {
    Section s;
    s.identities = {{"recursion_right", tolerance::kRecursionRight}, {"recursion_left", tolerance::kRecursionLeft}};
    run_section(s, o.samples, o.threads, [&](size_t i, std::vector<double> &r, double &spread) {
        DensityMatrix psi = sample_state(o, 4, i);
        RecursionCheck right = check_recursion_right(psi, o.optimizer);
        RecursionCheck left = check_recursion_left(psi, o.optimizer);
        r[0] = right.residual;
        r[1] = left.residual;
        spread = std::max(right.max_spread, left.max_spread);
    });
    return s;
}

Section work_deficit(const VerifyOptions &o) {
    Section s;
    s.identities = {{"wd_dominates_discord", tolerance::kWorkDeficit},
                    {"wd_deficit_left", tolerance::kWorkDeficit},
                    {"wd_deficit_right", tolerance::kWorkDeficit}};
    run_section(s, o.samples, o.threads, [&](size_t i, std::vector<double> &r, double &spread) {
        DensityMatrix psi = sample_state(o, 3, i);
        const auto &l = psi.labels();
        DensityMatrix pair = o.state_selector ? partial_trace(psi, {l[0], l[1]})
                                          : haar_random_mixed(DimensionList::qubits(2), 2 + i % 3,
                                                              sample_seed(o.seed ^ 0x5744, i));
        const auto &p = pair.labels();
        for (size_t m = 0; m < 2; m++) {
            DiscordResult d = discord(pair, {p[m]}, {p[1 - m]}, o.optimizer);
            WorkDeficitResult w = work_deficit_search(pair, {p[m]}, o.optimizer);
            r[0] = std::max(r[0], d.discord - w.value);
            spread = std::max({spread, d.conditional.diagnostics.spread, w.search.diagnostics.spread});
        }
        WorkDeficitBounds b = work_deficit_bounds(psi, l[0], o.optimizer);
        r[1] = std::max(0.0, b.delta_left_wd - b.delta_left_discord);
        r[2] = std::max(0.0, b.delta_right_wd - b.delta_right_discord);
    });
    return s;
}

void collect(VerifyReport &report, const Section &s) {
    for (size_t k = 0; k < s.identities.size(); k++) {
        IdentityResult id;
        id.name = s.identities[k].first;
        id.tolerance = report.options.tolerance_override.value_or(s.identities[k].second);
        id.samples = s.residuals.size();
        double sum = 0;
        for (const auto &row : s.residuals) {
            id.max_residual = std::max(id.max_residual, row[k]);
            sum += row[k];
        }
        id.mean_residual = id.samples ? sum / static_cast<double>(id.samples) : 0;
        id.pass = id.max_residual <= id.tolerance;
        report.pass = report.pass && id.pass;
        report.identities.push_back(id);
    }
    for (double sp : s.spreads) {
        report.max_optimizer_spread = std::max(report.max_optimizer_spread, sp);
    }
}

}  // namespace

std::optional<Suite> parse_suite(const std::string &name) {
    if (name == "tripartite") {
        return Suite::Tripartite;
    }
    if (name == "npartite") {
        return Suite::Npartite;
    }
    if (name == "workdeficit") {
        return Suite::WorkDeficit;
    }
    if (name == "all") {
        return Suite::All;
    }
    return std::nullopt;
}

const char *suite_name(Suite suite) {
    switch (suite) {
        case Suite::Tripartite:
            return "tripartite";
        case Suite::Npartite:
            return "npartite";
        case Suite::WorkDeficit:
            return "workdeficit";
        default:
            return "all";
    }
}

uint64_t sample_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

VerifyReport run_verify(const VerifyOptions &options) {
    if (options.samples < 1) {
        throw Error(ErrorCode::OutOfRange, "verify needs at least one sample");
    }
    VerifyReport report;
    report.options = options;
    const Suite s = options.suite;
    if (s == Suite::Tripartite || s == Suite::All) {
        collect(report, tripartite(options));
    }
    if (s == Suite::Npartite || s == Suite::All) {
        collect(report, npartite(options));
    }
    if (s == Suite::WorkDeficit || s == Suite::All) {
        collect(report, work_deficit(options));
    }
    return report;
}

}  // namespace qmono::app
