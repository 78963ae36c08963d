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

#include "qmono/monogamy.h"

#include <algorithm>
#include <cmath>

#include "qmono/entropy.h"
#include "qmono/errors.h"

namespace qmono {

namespace {

void require_pure(const DensityMatrix &rho) {
    if (!is_pure(rho)) {
        throw Error(ErrorCode::NotPure, "state has purity " + std::to_string(rho.purity()));
    }
}

void require_three_qubits(const DensityMatrix &rho) {
    if (rho.dims().dims() != std::vector<size_t>{2, 2, 2}) {
        throw Error(ErrorCode::WrongArity, "three-qubit state required");
    }
}

void require_qubit(const DensityMatrix &rho, const std::string &label) {
    if (rho.dims().dim_of(label) != 2) {
        throw Error(ErrorCode::OutOfRange, "anchor " + label + " must be a qubit");
    }
}

// The two indices other than i, in increasing order.
std::pair<size_t, size_t> others(size_t i) {
    switch (i) {
        case 0:
            return {1, 2};
        case 1:
            return {0, 2};
        default:
            return {0, 1};
    }
}

double pair_discord(const DensityMatrix &rho, const std::string &measured, const std::string &target,
                    const OptimizerOptions &options) {
    return discord(partial_trace(rho, {measured, target}), {measured}, {target}, options).discord;
}

double spread_of(const std::vector<OptimizerDiagnostics> &diags) {
    double s = 0;
    for (const auto &d : diags) {
        s = std::max(s, d.spread);
    }
    return s;
}

}  // namespace

const char *route_name(DeficitRoute route) {
    return route == DeficitRoute::Optimized ? "optimized" : "pure_closed_form";
}

const char *classification_name(Classification c) {
    switch (c) {
        case Classification::GhzClass:
            return "GHZ_class";
        case Classification::WClass:
            return "W_class";
        default:
            return "not_applicable";
    }
}

AverageCorrelations average_correlations(const DensityMatrix &rho, const PartySet &x, const PartySet &y,
                                         const OptimizerOptions &options) {
    require_disjoint({&x, &y});
    DensityMatrix pair = partial_trace(rho, join(x, y));
    DiscordResult right = discord(pair, x, y, options);
    DiscordResult left = discord(pair, y, x, options);
    AverageCorrelations avg;
    avg.omega_I = (right.classical + left.classical) / 2;
    avg.omega_D = (right.discord + left.discord) / 2;
    avg.diagnostics = {right.conditional.diagnostics, left.conditional.diagnostics};
    return avg;
}

size_t TripartiteAnalysis::index_of(const std::string &label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw Error(ErrorCode::UnknownLabel, label);
    }
    return static_cast<size_t>(it - labels.begin());
}

double TripartiteAnalysis::delta_right(size_t i) const {
    auto [j, k] = others(i);
    return bipartition[i].discord - pair[i][j].discord - pair[i][k].discord;
}

double TripartiteAnalysis::delta_left(size_t i) const {
    // For pure states D<-(i | rest) = S(i) exactly.
    auto [j, k] = others(i);
    return entropy[i] - pair[j][i].discord - pair[k][i].discord;
}

double TripartiteAnalysis::delta_right_closed(size_t i) const {
    auto [j, k] = others(i);
    return entropy[j] + entropy[k] - entropy[i] - 2 * eof[j][k];
}

double TripartiteAnalysis::delta_left_closed(size_t i) const {
    auto [j, k] = others(i);
    return entropy[i] - eof[i][j] - eof[i][k];
}

double TripartiteAnalysis::omega_I(size_t i, size_t j) const {
    return (pair[i][j].classical + pair[j][i].classical) / 2;
}

double TripartiteAnalysis::omega_D(size_t i, size_t j) const {
    return (pair[i][j].discord + pair[j][i].discord) / 2;
}

double TripartiteAnalysis::max_spread() const {
    double s = 0;
    for (size_t i = 0; i < 3; i++) {
        s = std::max(s, bipartition[i].conditional.diagnostics.spread);
        for (size_t j = 0; j < 3; j++) {
            if (i != j) {
                s = std::max(s, pair[i][j].conditional.diagnostics.spread);
            }
        }
    }
    return s;
}

TripartiteAnalysis analyze_tripartite(const DensityMatrix &psi, const OptimizerOptions &options) {
    require_three_qubits(psi);
    require_pure(psi);
    TripartiteAnalysis t;
    t.labels = psi.labels();
    const auto &l = t.labels;
    for (size_t i = 0; i < 3; i++) {
        t.entropy[i] = subsystem_entropy(psi, {l[i]});
        t.bipartition[i] = discord(psi, {l[i]}, psi.dims().complement({l[i]}), options);
    }
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = i + 1; j < 3; j++) {
            DensityMatrix rho = partial_trace(psi, {l[i], l[j]});
            t.pair[i][j] = discord(rho, {l[i]}, {l[j]}, options);
            t.pair[j][i] = discord(rho, {l[j]}, {l[i]}, options);
            t.eof[i][j] = t.eof[j][i] = eof_2q(rho);
        }
    }
    return t;
}

double residual_left_from_right(const TripartiteAnalysis &t, size_t a) {
    auto [b, c] = others(a);
    return std::abs(t.delta_left(a) - (t.delta_right(b) + t.delta_right(c)) / 2);
}

double residual_right_from_left(const TripartiteAnalysis &t, size_t a) {
    auto [b, c] = others(a);
    return std::abs(t.delta_right(a) - (t.delta_left(b) + t.delta_left(c) - t.delta_left(a)));
}

double residual_deficit_difference(const TripartiteAnalysis &t, size_t c) {
    auto [a, b] = others(c);
    return std::abs(t.eof[a][b] - t.omega_D(a, b) - (t.delta_left(c) - t.delta_right(c)) / 2);
}

std::pair<double, double> residual_lami_limi(const TripartiteAnalysis &t, size_t b) {
    auto [a, c] = others(b);
    double d = t.delta_right(b);
    return {std::abs(d - (t.pair[b][a].classical - t.pair[b][a].discord)),
            std::abs(d - (t.pair[b][c].classical - t.pair[b][c].discord))};
}

double residual_average_correlations(const TripartiteAnalysis &t, size_t c) {
    auto [a, b] = others(c);
    return std::abs(t.delta_left(c) - (t.omega_I(a, b) - t.omega_D(a, b)));
}

double check_left_from_right(const DensityMatrix &psi, const OptimizerOptions &options) {
    return residual_left_from_right(analyze_tripartite(psi, options), 0);
}

double check_right_from_left(const DensityMatrix &psi, const OptimizerOptions &options) {
    return residual_right_from_left(analyze_tripartite(psi, options), 0);
}

double check_deficit_difference(const DensityMatrix &psi, const OptimizerOptions &options) {
    return residual_deficit_difference(analyze_tripartite(psi, options), 2);
}

std::pair<double, double> check_lami_limi(const DensityMatrix &psi, const std::string &anchor,
                                              const OptimizerOptions &options) {
    TripartiteAnalysis t = analyze_tripartite(psi, options);
    return residual_lami_limi(t, t.index_of(anchor));
}

double check_average_correlations(const DensityMatrix &psi, const OptimizerOptions &options) {
    return residual_average_correlations(analyze_tripartite(psi, options), 2);
}

double deficit_right(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options) {
    require_qubit(rho, anchor);
    PartySet rest = rho.dims().complement({anchor});
    double value = discord(rho, {anchor}, rest, options).discord;
    for (const auto &other : rest) {
        value -= pair_discord(rho, anchor, other, options);
    }
    return value;
}

double deficit_right_closed_form(const DensityMatrix &psi, const std::string &anchor) {
    require_three_qubits(psi);
    require_pure(psi);
    PartySet rest = psi.dims().complement({anchor});
    return subsystem_entropy(psi, {rest[0]}) + subsystem_entropy(psi, {rest[1]}) -
           subsystem_entropy(psi, {anchor}) - 2 * eof_2q(partial_trace(psi, rest));
}

double deficit_left_closed_form(const DensityMatrix &psi, const std::string &anchor) {
    require_three_qubits(psi);
    require_pure(psi);
    PartySet rest = psi.dims().complement({anchor});
    return subsystem_entropy(psi, {anchor}) - eof_2q(partial_trace(psi, {anchor, rest[0]})) -
           eof_2q(partial_trace(psi, {anchor, rest[1]}));
}

namespace {

// D<-(anchor | rest): S(anchor) for pure input, else an optimization over the
// composite rest.
DiscordResult left_bipartition(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options,
                               bool &heuristic) {
    PartySet rest = rho.dims().complement({anchor});
    if (is_pure(rho)) {
        DiscordResult r;
        r.target_entropy = subsystem_entropy(rho, {anchor});
        r.mutual = mutual_information(rho, {anchor}, rest);
        r.discord = r.target_entropy;
        r.classical = r.mutual - r.discord;
        heuristic = false;
        return r;
    }
    if (rho.dims().dim_of(rest) > 4) {
        throw Error(ErrorCode::OutOfRange, "composite measured party larger than 4 dimensions");
    }
    heuristic = rest.size() > 1;
    return discord(rho, rest, {anchor}, options);
}

}  // namespace

double deficit_left(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options) {
    if (rho.dims().dims() == std::vector<size_t>{2, 2, 2} && is_pure(rho)) {
        return deficit_left_closed_form(rho, anchor);
    }
    bool heuristic = false;
    double value = left_bipartition(rho, anchor, options, heuristic).discord;
    for (const auto &other : rho.dims().complement({anchor})) {
        value -= pair_discord(rho, other, anchor, options);
    }
    return value;
}

DeficitReport deficit_report(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options) {
    DeficitReport r;
    r.anchor = anchor;
    rho.dims().index_of(anchor);
    const bool pure3 = rho.dims().dims() == std::vector<size_t>{2, 2, 2} && is_pure(rho);
    if (!pure3) {
        r.route = DeficitRoute::Optimized;
        r.delta_right = deficit_right(rho, anchor, options);
        PartySet rest = rho.dims().complement({anchor});
        if (is_pure(rho) || rho.dims().dim_of(rest) <= 4) {
            r.delta_left = deficit_left(rho, anchor, options);
            r.left_heuristic = !is_pure(rho) && rest.size() > 1;
        }
        if (rho.dims().size() == 3 && rho.dims().dim_of(anchor) == 2) {
            r.identity_residuals["interaction_decomposition"] = interaction_decomposition_residual(rho, anchor, options);
        }
        return r;
    }
    TripartiteAnalysis t = analyze_tripartite(rho, options);
    size_t i = t.index_of(anchor);
    r.route = DeficitRoute::PureClosedForm;
    r.delta_left = t.delta_left_closed(i);
    r.delta_right = t.delta_right_closed(i);
    auto &res = r.identity_residuals;
    res["route_left"] = std::abs(t.delta_left(i) - *r.delta_left);
    res["route_right"] = std::abs(t.delta_right(i) - r.delta_right);
    res["left_from_right"] = residual_left_from_right(t, i);
    res["right_from_left"] = residual_right_from_left(t, i);
    res["deficit_difference"] = residual_deficit_difference(t, i);
    auto [first, second] = residual_lami_limi(t, i);
    res["lami_limi_first"] = first;
    res["lami_limi_second"] = second;
    res["average_correlations"] = residual_average_correlations(t, i);
    res["interaction_decomposition"] = interaction_decomposition_residual(rho, anchor, options);
    ClassificationResult c = classify_ghz_w(rho);
    r.classification = c.verdict;
    r.classification_boundary = c.boundary;
    return r;
}

ClassificationResult classify_ghz_w(const DensityMatrix &psi) {
    require_three_qubits(psi);
    require_pure(psi);
    ClassificationResult r;
    const auto &l = psi.labels();
    r.delta_left_c = deficit_left_closed_form(psi, l[2]);
    for (const auto &label : l) {
        if (subsystem_entropy(psi, {label}) <= tolerance::kGenuine) {
            return r;
        }
    }
    if (r.delta_left_c >= -tolerance::kClassify) {
        r.verdict = Classification::GhzClass;
        r.boundary = r.delta_left_c < tolerance::kClassify;
    } else {
        r.verdict = Classification::WClass;
    }
    return r;
}

InteractionDecomposition interaction_decomposition(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options) {
    require_qubit(rho, anchor);
    InterrogatedTerms terms = interrogated_terms(rho, anchor, options);
    PartySet a{anchor};
    InteractionDecomposition c;
    c.delta_right = discord_from_conditional(rho, a, join(terms.b, terms.c), terms.given_bc).discord -
                    discord_from_conditional(rho, a, terms.b, terms.given_b).discord -
                    discord_from_conditional(rho, a, terms.c, terms.given_c).discord;
    c.unmeasured_interaction = interaction_info_unmeasured(rho, anchor);
    c.interrogated_interaction = interrogated_interaction_info(rho, terms);
    c.residual = std::abs(c.delta_right - (c.unmeasured_interaction - c.interrogated_interaction));
    return c;
}

double interaction_decomposition_residual(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options) {
    return interaction_decomposition(rho, anchor, options).residual;
}

double deficit_right_npartite(const DensityMatrix &psi, const std::string &anchor, const OptimizerOptions &options) {
    require_pure(psi);
    require_qubit(psi, anchor);
    double value = subsystem_entropy(psi, {anchor});
    for (const auto &other : psi.dims().complement({anchor})) {
        value -= pair_discord(psi, anchor, other, options);
    }
    return value;
}

namespace {

void require_recursion_input(const DensityMatrix &psi) {
    require_pure(psi);
    if (psi.dims().size() < 3) {
        throw Error(ErrorCode::WrongArity, "recursion needs at least three parties");
    }
    require_qubit(psi, psi.labels()[0]);
}

}  // namespace

RecursionCheck check_recursion_right(const DensityMatrix &psi, const OptimizerOptions &options) {
    require_recursion_input(psi);
    const auto &l = psi.labels();
    const size_t n = l.size();
    const std::string &first = l[0];
    PartySet head(l.begin(), l.end() - 1);
    PartySet middle(l.begin() + 1, l.end() - 1);
    RecursionCheck rc;

    // Pair discords A1 Ai for i < N appear in both deficits and cancel; the
    // difference keeps only the bipartition terms and the A1 AN pair.
    DiscordResult last = discord(partial_trace(psi, {first, l[n - 1]}), {first}, {l[n - 1]}, options);
    rc.diagnostics.push_back(last.conditional.diagnostics);
    rc.lhs = subsystem_entropy(psi, {first}) - last.discord;
    // Delta->(N-1) keeps its bipartition term. With three parties that term
    // is the A1 A2 pair discord and Delta->(2) is zero.
    DiscordResult hb = discord(partial_trace(psi, head), {first}, middle, options);
    rc.diagnostics.push_back(hb.conditional.diagnostics);
    rc.lhs -= hb.discord;
    rc.rhs = last.classical - last.discord;
    rc.residual = std::abs(rc.lhs - rc.rhs);
    rc.max_spread = spread_of(rc.diagnostics);
    return rc;
}

RecursionCheck check_recursion_left(const DensityMatrix &psi, const OptimizerOptions &options) {
    require_recursion_input(psi);
    const auto &l = psi.labels();
    const size_t n = l.size();
    const std::string &first = l[0];
    PartySet head(l.begin(), l.end() - 1);
    PartySet middle(l.begin() + 1, l.end() - 1);
    RecursionCheck rc;

    DiscordResult last = discord(partial_trace(psi, {first, l[n - 1]}), {l[n - 1]}, {first}, options);
    rc.diagnostics.push_back(last.conditional.diagnostics);
    rc.lhs = subsystem_entropy(psi, {first}) - last.discord;
    // Delta<-(N-1) on the head reduction, whose pair terms cancel. With three
    // parties it is the single pair discord and Delta<-(2) is zero.
    DiscordResult hb = discord(partial_trace(psi, head), middle, {first}, options);
    rc.diagnostics.push_back(hb.conditional.diagnostics);
    rc.lhs -= hb.discord;
    AverageCorrelations avg = average_correlations(psi, middle, {l[n - 1]}, options);
    rc.diagnostics.insert(rc.diagnostics.end(), avg.diagnostics.begin(), avg.diagnostics.end());
    rc.rhs = avg.omega_I - avg.omega_D;
    rc.residual = std::abs(rc.lhs - rc.rhs);
    rc.max_spread = spread_of(rc.diagnostics);
    return rc;
}

SquashedReport squashed_bound_pure(const DensityMatrix &psi, const std::string &anchor,
                                   const OptimizerOptions &options) {
    TripartiteAnalysis t = analyze_tripartite(psi, options);
    size_t c = t.index_of(anchor);
    SquashedReport r;
    // E(anchor | rest) of a pure state is the entanglement entropy.
    r.delta_eof = t.delta_left_closed(c);
    r.delta_left = t.delta_left(c);
    r.residual = std::abs(r.delta_eof - r.delta_left);
    r.implied_lower_bound = std::max(r.delta_left, 0.0);
    return r;
}

WorkDeficitBounds work_deficit_bounds(const DensityMatrix &psi, const std::string &anchor,
                                      const OptimizerOptions &options) {
    TripartiteAnalysis t = analyze_tripartite(psi, options);
    size_t i = t.index_of(anchor);
    PartySet rest = psi.dims().complement({anchor});
    WorkDeficitBounds b;
    b.delta_left_discord = t.delta_left(i);
    b.delta_right_discord = t.delta_right(i);
    b.delta_left_wd = t.entropy[i];
    b.delta_right_wd = work_deficit_oneway(psi, {anchor}, options);
    for (const auto &other : rest) {
        DensityMatrix pair = partial_trace(psi, {anchor, other});
        b.delta_left_wd -= work_deficit_oneway(pair, {other}, options);
        b.delta_right_wd -= work_deficit_oneway(pair, {anchor}, options);
    }
    b.holds = b.delta_left_wd <= b.delta_left_discord + tolerance::kWorkDeficit &&
              b.delta_right_wd <= b.delta_right_discord + tolerance::kWorkDeficit;
    return b;
}

}  // namespace qmono
