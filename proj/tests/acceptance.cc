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

// Acceptance checks. Each criterion prints one PASS/FAIL line; pass criterion
// ids on the command line to run a subset ("1", "2", "3abc", "3d", ... "9").
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracle.h"
#include "qmono/app/sweep.h"
#include "qmono/app/verify.h"
#include "qmono/correlations.h"
#include "qmono/entropy.h"
#include "qmono/monogamy.h"
#include "qmono/states.h"

using namespace qmono;

namespace {

// Sample seeds. The tripartite sample is the one `qmonogamy verify tripartite
// --n 200 --seed 7` draws.
constexpr uint64_t kTripartiteSeed = 7;
constexpr uint64_t kMixedSeed = 11;
constexpr uint64_t kClassifySeed = 13;
constexpr uint64_t kWorkDeficitSeed = 17;
constexpr uint64_t kFourQubitSeed = 19;
constexpr uint64_t kOracleSeed = 23;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

std::string check(const std::string &name, double value, double tol) {
    return name + "=" + fmt("%.3g", value) + (value <= tol ? "<=" : ">") + fmt("%.0e", tol);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DensityMatrix tripartite_sample(size_t i) {
    return haar_random_pure(DimensionList::qubits(3), app::sample_seed(kTripartiteSeed, i)).density();
}

Outcome criterion_identities() {
    auto t0 = std::chrono::steady_clock::now();
    double r4 = 0, r5 = 0, r8 = 0, r9 = 0, r13 = 0;
    for (size_t i = 0; i < 200; i++) {
        TripartiteAnalysis t = analyze_tripartite(tripartite_sample(i));
        for (size_t a = 0; a < 3; a++) {
            r4 = std::max(r4, residual_left_from_right(t, a));
            r5 = std::max(r5, residual_right_from_left(t, a));
            r8 = std::max(r8, residual_deficit_difference(t, a));
            auto [x, y] = residual_lami_limi(t, a);
            r9 = std::max({r9, x, y});
            r13 = std::max(r13, residual_average_correlations(t, a));
        }
    }
    double secs = seconds_since(t0);
    bool pass = r4 <= 5e-4 && r5 <= 5e-4 && r8 <= 1e-3 && r9 <= 5e-4 && r13 <= 5e-4 && secs <= 300;
    return {pass, check("left_from_right", r4, 5e-4) + " " + check("right_from_left", r5, 5e-4) + " " +
                      check("deficit_difference", r8, 1e-3) + " " + check("lami_limi", r9, 5e-4) + " " +
                      check("average_correlations", r13, 5e-4) + " time=" + fmt("%.1fs", secs)};
}

Outcome criterion_koashi_winter() {
    double kw = 0, half = 0;
    for (size_t i = 0; i < 200; i++) {
        DensityMatrix psi = tripartite_sample(i);
        double e_bc = eof_2q(partial_trace(psi, {"B", "C"}));
        InterrogatedTerms terms = interrogated_terms(psi, "A");
        kw = std::max(kw, std::abs(e_bc - terms.given_b.value));
        half = std::max(half, std::abs(e_bc - interrogated_cmi(terms) / 2));
    }
    return {kw <= 5e-4 && half <= 1e-3, check("eof_vs_conditional", kw, 5e-4) + " " +
                                            check("eof_vs_half_interrogated_cmi", half, 1e-3)};
}

struct FigureCurves {
    std::vector<app::SweepRow> rows;
    app::SweepOptions options;
    double seconds;
    size_t grid;

    double at(size_t eps_index, size_t p_index) const {
        return rows[eps_index * grid + p_index].delta_right_A;
    }
};

const FigureCurves &figure_curves() {
    static const FigureCurves curves = [] {
        FigureCurves c;
        auto t0 = std::chrono::steady_clock::now();
        c.rows = app::run_sweep(c.options);
        c.seconds = seconds_since(t0);
        c.grid = app::sweep_grid(c.options).size();
        return c;
    }();
    return curves;
}

// Peaks of a sampled curve, ignoring wiggles below `plateau`: direction flips
// only count once the curve has moved by more than `plateau` since the last
// extreme.
std::vector<size_t> peaks(const std::vector<double> &v, double plateau) {
    std::vector<size_t> out;
    int direction = 0;
    size_t extreme = 0;
    for (size_t i = 1; i < v.size(); i++) {
        if (direction >= 0 && v[i] > v[extreme]) {
            extreme = i;
            direction = 1;
        } else if (direction <= 0 && v[i] < v[extreme]) {
            extreme = i;
            direction = -1;
        } else if (direction == 1 && v[extreme] - v[i] > plateau) {
            out.push_back(extreme);
            extreme = i;
            direction = -1;
        } else if (direction == -1 && v[i] - v[extreme] > plateau) {
            extreme = i;
            direction = 1;
        }
    }
    return out;
}

Outcome criterion_figure_shape() {
    const FigureCurves &c = figure_curves();
    // Eps order in the sweep: 0.5, 0.75, 1.
    double worst_order = -1e300;
    for (size_t k = 0; k < c.grid; k++) {
        worst_order = std::max({worst_order, c.at(2, k) - c.at(1, k), c.at(1, k) - c.at(0, k)});
    }
    bool a = worst_order <= 1e-3;
    double endpoint = std::abs(c.at(2, c.grid - 1));
    bool b = endpoint <= 1e-3;
    std::vector<double> curve;
    for (size_t k = 0; k < c.grid; k++) {
        curve.push_back(c.at(2, k));
    }
    std::vector<size_t> pk = peaks(curve, 1e-3);
    bool single = pk.size() == 1 && pk[0] > 0 && pk[0] + 1 < c.grid;
    double peak_p = pk.empty() ? -1 : c.rows[2 * c.grid + pk[0]].p;
    double route = 0;
    for (const auto &r : c.rows) {
        route = std::max(route, r.route_residual);
    }
    bool routes = route <= 1e-3;
    bool fast = c.seconds <= 180;
    return {a && b && single && routes && fast,
            "(a) max eps-order violation=" + fmt("%.3g", std::max(worst_order, 0.0)) + (a ? " ok" : " FAIL") +
                " (b) |delta(p=1,eps=1)|=" + fmt("%.3g", endpoint) + (b ? " ok" : " FAIL") + " (c) peaks=" +
                std::to_string(pk.size()) + " at p=" + fmt("%.2f", peak_p) + (single ? " ok" : " FAIL") +
                " route_agreement=" + fmt("%.3g", route) + " time=" + fmt("%.1fs", c.seconds)};
}

Outcome criterion_figure_crossings() {
    const FigureCurves &c = figure_curves();
    std::string detail = "p*:";
    double lo = 1e300, hi = -1e300;
    bool all_found = true;
    for (double e : c.options.eps) {
        auto p = app::critical_point(c.rows, e);
        detail += " eps=" + fmt("%g", e) + "->" + (p ? fmt("%.3f", *p) : std::string("none"));
        if (!p) {
            all_found = false;
            continue;
        }
        lo = std::min(lo, *p);
        hi = std::max(hi, *p);
    }
    double spread = all_found ? hi - lo : 1e300;
    detail += " (d) spread=" + fmt("%.3f", spread) + (spread <= 0.02 ? "<=" : ">") + "0.02";
    return {all_found && spread <= 0.02, detail};
}

Outcome criterion_decomposition() {
    const double weights[] = {0.1, 0.5, 0.9};
    double worst = 0;
    for (size_t i = 0; i < 50; i++) {
        DensityMatrix psi = haar_random_pure(DimensionList::qubits(3), app::sample_seed(kMixedSeed, i)).density();
        DensityMatrix rho = mix_with_identity(psi, weights[i % 3]);
        worst = std::max(worst, interaction_decomposition_residual(rho, "A"));
    }
    return {worst <= 1e-9, check("residual", worst, 1e-9)};
}

StateVector random_local_unitaries(const StateVector &psi, Rng &rng) {
    StateVector out = psi;
    for (const char *p : {"A", "B", "C"}) {
        out = apply_local_unitary(out, p, haar_random_unitary(2, rng));
    }
    return out;
}

Outcome criterion_classification() {
    Rng rng(kClassifySeed);
    size_t ghz_ok = 0, w_ok = 0, invariant = 0, total_lu = 0;
    double ghz_min = 1e300, w_max = -1e300;
    for (size_t i = 0; i < 50; i++) {
        StateVector g = ghz_generalized(0.05 + 0.9 * rng.uniform());
        // W weights sampled uniformly on the simplex restricted to a, b, c >= 0.1.
        double a, b;
        do {
            a = rng.uniform();
            b = rng.uniform();
        } while (a + b > 1);
        a = 0.1 + 0.7 * a;
        b = 0.1 + 0.7 * b;
        StateVector w = w_generalized(a, b, 1 - a - b);
        for (const StateVector *s : {&g, &w}) {
            ClassificationResult base = classify_ghz_w(s->density());
            if (s == &g) {
                ghz_ok += base.verdict == Classification::GhzClass;
                ghz_min = std::min(ghz_min, base.delta_left_c);
            } else {
                w_ok += base.verdict == Classification::WClass;
                w_max = std::max(w_max, base.delta_left_c);
            }
            for (int k = 0; k < 10; k++) {
                total_lu++;
                invariant += classify_ghz_w(random_local_unitaries(*s, rng).density()).verdict == base.verdict;
            }
        }
    }
    bool pass = ghz_ok == 50 && w_ok == 50 && invariant == total_lu;
    return {pass, "GHZ_class " + std::to_string(ghz_ok) + "/50 (min delta=" + fmt("%.3g", ghz_min) +
                      ") W_class " + std::to_string(w_ok) + "/50 (max delta=" + fmt("%.3g", w_max) +
                      ") LU-invariant " + std::to_string(invariant) + "/" + std::to_string(total_lu)};
}

Outcome criterion_squashed() {
    double worst = 0;
    for (size_t i = 0; i < 200; i++) {
        worst = std::max(worst, squashed_bound_pure(tripartite_sample(i), "C").residual);
    }
    return {worst <= 1e-3, check("residual", worst, 1e-3) + " bound=implied_by_identity"};
}

Outcome criterion_work_deficit() {
    double pair_violation = 0;
    for (size_t i = 0; i < 100; i++) {
        DensityMatrix rho =
            haar_random_mixed(DimensionList::qubits(2), 2 + i % 3, app::sample_seed(kWorkDeficitSeed, i));
        for (const auto &[m, t] : {std::pair{"A", "B"}, std::pair{"B", "A"}}) {
            double d = discord(rho, {m}, {t}).discord;
            double w = work_deficit_oneway(rho, {m});
            pair_violation = std::max(pair_violation, d - w);
        }
    }
    double left = -1e300, right = -1e300;
    for (size_t i = 0; i < 50; i++) {
        DensityMatrix psi =
            haar_random_pure(DimensionList::qubits(3), app::sample_seed(kWorkDeficitSeed + 1, i)).density();
        WorkDeficitBounds b = work_deficit_bounds(psi, "A");
        left = std::max(left, b.delta_left_wd - b.delta_left_discord);
        right = std::max(right, b.delta_right_wd - b.delta_right_discord);
    }
    bool pass = pair_violation <= 5e-4 && left <= 5e-4 && right <= 5e-4;
    return {pass, "max(D - WD)=" + fmt("%.3g", pair_violation) + " max(left WD deficit - discord deficit)=" +
                      fmt("%.3g", left) + " max(right)=" + fmt("%.3g", right) + " tol=5e-4"};
}

Outcome criterion_recursions() {
    auto t0 = std::chrono::steady_clock::now();
    double right = 0, left = 0, spread = 0;
    for (size_t i = 0; i < 30; i++) {
        DensityMatrix psi = haar_random_pure(DimensionList::qubits(4), app::sample_seed(kFourQubitSeed, i)).density();
        RecursionCheck r = check_recursion_right(psi);
        RecursionCheck l = check_recursion_left(psi);
        right = std::max(right, r.residual);
        left = std::max(left, l.residual);
        spread = std::max({spread, r.max_spread, l.max_spread});
    }
    double secs = seconds_since(t0);
    return {right <= 5e-3 && left <= 1e-2 && secs <= 600,
            check("right", right, 5e-3) + " " + check("left", left, 1e-2) +
                " max_optimizer_spread=" + fmt("%.3g", spread) + " time=" + fmt("%.1fs", secs)};
}

std::vector<DensityMatrix> oracle_states() {
    std::vector<DensityMatrix> out;
    auto pair = [](const StateVector &psi, PartySet keep) { return partial_trace(psi.density(), keep); };
    out.push_back(pair(psi_tilde(1.0 / 3, 1), {"A", "B"}));
    out.push_back(pair(psi_tilde(1.0 / 3, 1), {"B", "C"}));
    out.push_back(pair(psi_tilde(0.5, 0.75), {"A", "B"}));
    out.push_back(pair(psi_tilde(0.8, 0.5), {"A", "C"}));
    out.push_back(pair(ghz(3), {"A", "B"}));
    StateVector bell(DimensionList::qubits(2), {std::sqrt(0.5), 0, 0, std::sqrt(0.5)});
    out.push_back(mix_with_identity(bell.density(), 0.3));
    for (uint64_t s = 0; s < 7; s++) {
        out.push_back(pair(haar_random_pure(DimensionList::qubits(3), app::sample_seed(kOracleSeed, s)), {"A", "B"}));
    }
    for (uint64_t s = 0; s < 7; s++) {
        out.push_back(haar_random_mixed(DimensionList::qubits(2), 2 + s % 3, app::sample_seed(kOracleSeed + 1, s)));
    }
    return out;
}

Outcome criterion_oracle() {
    double worst_below = -1e300, worst_gap = 0;
    size_t n = 0;
    for (const DensityMatrix &rho : oracle_states()) {
        n++;
        const auto &lab = rho.labels();
        double lib = min_avg_conditional_entropy(rho, {lab[0]}, {lab[1]}).value;
        oracle::GridMin g = oracle::grid_min_conditional_entropy(rho.matrix(), 0, 721, 1441);
        worst_below = std::max(worst_below, lib - g.value);
        worst_gap = std::max(worst_gap, std::abs(lib - g.value));
    }
    bool pass = worst_below <= 1e-9 && worst_gap <= 1e-5;
    return {pass, std::to_string(n) + " states: max(lib - grid)=" + fmt("%.3g", worst_below) +
                      " (<=1e-9) max|lib - grid|=" + fmt("%.3g", worst_gap) + " (<=1e-5)"};
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> criteria = {
        {"1", {"identity suite, 200 Haar 3-qubit pure states", criterion_identities}},
        {"2", {"Koashi-Winter cross-route", criterion_koashi_winter}},
        {"3abc", {"sweep shape (a) eps order (b) endpoint (c) single peak", criterion_figure_shape}},
        {"3d", {"sweep sign-change points agree", criterion_figure_crossings}},
        {"4", {"interaction decomposition, 50 mixed states", criterion_decomposition}},
        {"5", {"GHZ/W classification", criterion_classification}},
        {"6", {"entanglement deficit vs left discord deficit", criterion_squashed}},
        {"7", {"work-deficit ordering", criterion_work_deficit}},
        {"8", {"4-qubit recursions, 30 Haar states", criterion_recursions}},
        {"9", {"grid oracle agreement", criterion_oracle}},
    };
    std::vector<std::string> selected(argv + 1, argv + argc);
    bool all_pass = true;
    for (const auto &[id, entry] : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) {
            continue;
        }
        Outcome o = entry.second();
        all_pass = all_pass && o.pass;
        std::printf("criterion %-4s %s  %s: %s\n", id.c_str(), o.pass ? "PASS" : "FAIL", entry.first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
