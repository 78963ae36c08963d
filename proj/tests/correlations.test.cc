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

#include "qmono/correlations.h"

#include <cmath>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qmono/entropy.h"
#include "qmono/errors.h"
#include "qmono/states.h"

using namespace qmono;

namespace {

// Values frozen from an independent dense-grid plus simplex computation.
constexpr double kWLikePairDiscord = 0.5500477595827569;
constexpr double kWLikePairClassical = 0.36824807447173247;
constexpr double kWLikePairWorkDeficit = 0.6314420130168312;

DensityMatrix bell() {
    return StateVector(DimensionList::qubits(2), {std::sqrt(0.5), 0, 0, std::sqrt(0.5)}).density();
}

DensityMatrix w_like() {
    return psi_tilde(1.0 / 3, 1).density();
}

}  // namespace

TEST(correlations, classical_ghz_pair_has_no_discord) {
    DensityMatrix ab = partial_trace(ghz(3).density(), {"A", "B"});
    DiscordResult d = discord(ab, {"A"}, {"B"});
    EXPECT_NEAR(d.discord, 0, 1e-9);
    EXPECT_NEAR(d.classical, 1, 1e-9);
}

TEST(correlations, bell_state) {
    DiscordResult d = discord(bell(), {"A"}, {"B"});
    EXPECT_NEAR(d.discord, 1, 1e-9);
    EXPECT_NEAR(d.classical, 1, 1e-9);
    EXPECT_NEAR(concurrence_2q(bell()), 1, 1e-12);
    EXPECT_NEAR(eof_2q(bell()), 1, 1e-12);
    EXPECT_NEAR(work_deficit_oneway(bell(), {"A"}), 1, 1e-9);
}

TEST(correlations, split_identity_is_exact) {
    DensityMatrix rho = haar_random_mixed(DimensionList::qubits(2), 3, 4);
    for (int m = 0; m < 2; m++) {
        PartySet x{m ? "B" : "A"};
        PartySet y{m ? "A" : "B"};
        DiscordResult d = discord(rho, x, y);
        EXPECT_LE(std::abs(d.classical + d.discord - d.mutual), 1e-12);
        EXPECT_GE(d.discord, -5e-4);
    }
}

TEST(correlations, w_like_pair_matches_frozen_oracle) {
    DensityMatrix ab = partial_trace(w_like(), {"A", "B"});
    DiscordResult right = discord(ab, {"A"}, {"B"});
    DiscordResult left = discord(ab, {"B"}, {"A"});
    EXPECT_NEAR(right.discord, kWLikePairDiscord, 1e-5);
    EXPECT_NEAR(right.classical, kWLikePairClassical, 1e-5);
    EXPECT_NEAR(left.discord, kWLikePairDiscord, 1e-5);
    EXPECT_NEAR(work_deficit_oneway(ab, {"A"}), kWLikePairWorkDeficit, 1e-5);
}

TEST(correlations, w_like_pair_concurrence) {
    // The reduced pair of the W-like state has concurrence 2/3; its EOF
    // coincides with the pair discord by the Koashi-Winter relation.
    DensityMatrix bc = partial_trace(w_like(), {"B", "C"});
    EXPECT_NEAR(concurrence_2q(bc), 2.0 / 3, 1e-12);
    EXPECT_NEAR(eof_2q(bc), kWLikePairDiscord, 1e-9);
}

TEST(correlations, concurrence_of_pure_states) {
    // C = 2 |ad - bc| for a|00> + b|01> + c|10> + d|11>.
    for (uint64_t s = 0; s < 10; s++) {
        StateVector psi = haar_random_pure(DimensionList::qubits(2), 300 + s);
        const auto &a = psi.amplitudes();
        double expect = 2 * std::abs(a[0] * a[3] - a[1] * a[2]);
        EXPECT_NEAR(concurrence_2q(psi.density()), expect, 1e-10);
        EXPECT_NEAR(eof_2q(psi.density()), subsystem_entropy(psi.density(), {"A"}), 1e-9);
    }
    EXPECT_NEAR(concurrence_2q(all_zero(2).density()), 0, 1e-12);
}

TEST(correlations, concurrence_of_werner_states) {
    for (double f : {0.2, 0.5, 0.8, 1.0}) {
        DensityMatrix rho = mix_with_identity(bell(), 1 - f);
        EXPECT_NEAR(concurrence_2q(rho), std::max(0.0, (3 * f - 1) / 2), 1e-10) << f;
    }
    EXPECT_THROW(concurrence_2q(ghz(3).density()), Error);
}

TEST(correlations, eof_from_concurrence_is_monotone) {
    EXPECT_NEAR(eof_from_concurrence(0), 0, 1e-15);
    EXPECT_NEAR(eof_from_concurrence(1), 1, 1e-15);
    double prev = 0;
    for (double c = 0.05; c <= 1; c += 0.05) {
        double e = eof_from_concurrence(c);
        EXPECT_GT(e, prev);
        prev = e;
    }
    EXPECT_NEAR(binary_entropy(0.5), 1, 1e-15);
}

TEST(correlations, bipartition_discord_on_pure_states) {
    DensityMatrix g = ghz(3).density();
    EXPECT_NEAR(discord_bipartition(g, "A", {"B", "C"}, Direction::Left), 1, 1e-12);
    EXPECT_NEAR(discord_bipartition(g, "A", {"B", "C"}, Direction::Right), 1, 1e-9);
    EXPECT_NEAR(discord_bipartition(all_zero(3), "A", {"B", "C"}, Direction::Right), 0, 1e-9);
    DensityMatrix psi = haar_random_pure(DimensionList::qubits(3), 91).density();
    EXPECT_NEAR(discord_bipartition(psi, "B", {"A", "C"}, Direction::Right), subsystem_entropy(psi, {"B"}), 5e-4);
    try {
        discord_bipartition(mix_with_identity(g, 0.1), "A", {"B", "C"}, Direction::Left);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPure);
    }
}

TEST(correlations, pure_bipartite_symmetry) {
    DensityMatrix psi = haar_random_pure(DimensionList::qubits(2), 5).density();
    double s = subsystem_entropy(psi, {"A"});
    EXPECT_NEAR(discord(psi, {"A"}, {"B"}).discord, s, 5e-4);
    EXPECT_NEAR(discord(psi, {"B"}, {"A"}).discord, s, 5e-4);
    EXPECT_NEAR(eof_2q(psi), s, 5e-4);
}

TEST(correlations, koashi_winter_on_random_pure_states) {
    for (uint64_t s = 0; s < 10; s++) {
        DensityMatrix psi = haar_random_pure(DimensionList::qubits(3), 700 + s).density();
        double e_bc = eof_2q(partial_trace(psi, {"B", "C"}));
        double cond = min_avg_conditional_entropy(psi, {"A"}, {"B"}).value;
        EXPECT_NEAR(e_bc, cond, 5e-4);
        EXPECT_NEAR(interrogated_cmi(psi, "A") / 2, e_bc, 1e-3);
    }
}

TEST(correlations, closed_form_for_pair_discord) {
    // D<-(rho_AB) = S(B) - S(C) + E(AC) for pure ABC.
    for (uint64_t s = 0; s < 5; s++) {
        DensityMatrix psi = haar_random_pure(DimensionList::qubits(3), 40 + s).density();
        double d = discord(partial_trace(psi, {"A", "B"}), {"B"}, {"A"}).discord;
        double closed = subsystem_entropy(psi, {"B"}) - subsystem_entropy(psi, {"C"}) +
                        eof_2q(partial_trace(psi, {"A", "C"}));
        EXPECT_NEAR(d, closed, 1e-3);
    }
}

TEST(correlations, interrogated_quantities) {
    EXPECT_NEAR(interrogated_cmi(all_zero(3).density(), "A"), 0, 1e-6);
    EXPECT_NEAR(interrogated_interaction_info(all_zero(3).density(), "A"), 0, 1e-6);
    DensityMatrix g = ghz(3).density();
    EXPECT_NEAR(interrogated_cmi(g, "A"), 0, 1e-9);
    EXPECT_NEAR(interrogated_interaction_info(g, "A"), -1, 1e-9);
    EXPECT_THROW(interrogated_cmi(ghz(4).density(), "A"), Error);
}

TEST(correlations, work_deficit_dominates_discord) {
    for (uint64_t s = 0; s < 10; s++) {
        DensityMatrix rho = haar_random_mixed(DimensionList::qubits(2), 2 + s % 3, 900 + s);
        for (const char *m : {"A", "B"}) {
            const char *t = m[0] == 'A' ? "B" : "A";
            double wd = work_deficit_oneway(rho, {m});
            EXPECT_GE(wd, discord(rho, {m}, {t}).discord - 5e-4);
            EXPECT_GE(wd, -1e-9);
        }
    }
    DensityMatrix ab = partial_trace(ghz(3).density(), {"A", "B"});
    EXPECT_NEAR(work_deficit_oneway(ab, {"A"}), 0, 1e-9);
    EXPECT_NEAR(work_deficit_oneway(all_zero(2).density(), {"A"}), 0, 1e-9);
    EXPECT_THROW(work_deficit_oneway(ab, {"Z"}), Error);
}

TEST(correlations, work_deficit_matches_grid_oracle) {
    DensityMatrix rho = mix_with_identity(haar_random_mixed(DimensionList::qubits(2), 3, 61), 0.1);
    oracle::GridMin g = oracle::grid_min_dephased_entropy(rho.matrix(), 0, 181, 361);
    double wd = work_deficit_oneway(rho, {"A"});
    double expect = g.value - von_neumann(rho);
    EXPECT_LE(wd, expect + 1e-9);
    EXPECT_NEAR(wd, expect, 1e-4);
}

TEST(correlations, report_for_ghz) {
    CorrelationReport r = correlation_report(ghz(3).density());
    EXPECT_TRUE(r.pure);
    ASSERT_EQ(r.pairs.size(), 3u);
    ASSERT_EQ(r.bipartitions.size(), 3u);
    EXPECT_NEAR(*r.pairs[0].discord_right, 0, 1e-9);
    EXPECT_NEAR(r.entropies[0].second, 1, 1e-12);
    EXPECT_NEAR(*r.pairs[0].eof, 0, 1e-9);
    EXPECT_NEAR(*r.bipartitions[0].discord_right, 1, 1e-9);
    EXPECT_NEAR(*r.bipartitions[0].discord_left, 1, 1e-9);
    EXPECT_NEAR(*r.bipartitions[0].eof, 1, 1e-12);
}
