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

#include "qmono/measure_opt.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracle.h"
#include "qmono/entropy.h"
#include "qmono/errors.h"
#include "qmono/states.h"

using namespace qmono;

namespace {

// Reduced pair of psi_tilde(1/3, 1) = (|000> + |101> + |110>) / sqrt(3).
DensityMatrix w_like_pair() {
    return partial_trace(psi_tilde(1.0 / 3, 1).density(), {"A", "B"});
}

}  // namespace

TEST(measure_opt, qubit_basis_is_orthonormal) {
    ComplexMatrix u = basis_from_params({2, {0.7, 2.1}});
    EXPECT_LT(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)), 1e-15);
    EXPECT_NEAR(std::abs(u(0, 0)), std::cos(0.35), 1e-15);
    EXPECT_THROW(basis_from_params({2, {0.1}}), Error);
    EXPECT_THROW(basis_from_params({3, {0.1, 0.2}}), Error);
}

TEST(measure_opt, givens_parametrization_round_trip) {
    for (size_t d : {3, 4}) {
        EXPECT_EQ(measurement_param_count(d), d * (d - 1));
        ComplexMatrix u = haar_random_unitary(d, 60 + d);
        ComplexMatrix v = basis_from_params(params_from_unitary(u));
        EXPECT_LT(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)), 1e-13);
        // Columns agree up to phases: |<u_k|v_k>| = 1.
        for (size_t k = 0; k < d; k++) {
            Complex overlap = 0;
            for (size_t r = 0; r < d; r++) {
                overlap += std::conj(u(r, k)) * v(r, k);
            }
            EXPECT_NEAR(std::abs(overlap), 1, 1e-12) << d << " " << k;
        }
    }
}

TEST(measure_opt, projectors_resolve_identity) {
    auto ps = projectors_from_params({4, std::vector<double>(12, 0.3)});
    ComplexMatrix sum(4, 4);
    for (const auto &p : ps) {
        sum += p;
        EXPECT_LT(max_abs_diff(p * p, p), 1e-14);
    }
    EXPECT_LT(max_abs_diff(sum, ComplexMatrix::identity(4)), 1e-14);
}

TEST(measure_opt, measure_party_outcomes) {
    DensityMatrix g = ghz(3).density();
    MeasurementOutcomeEnsemble e = measure_party(g, {"B"}, {2, {0, 0}});
    ASSERT_EQ(e.outcomes.size(), 2u);
    EXPECT_NEAR(e.outcomes[0].probability, 0.5, 1e-15);
    ASSERT_TRUE(e.outcomes[0].state.has_value());
    EXPECT_EQ(e.outcomes[0].state->labels(), (PartySet{"A", "C"}));
    EXPECT_NEAR(e.outcomes[0].state->matrix()(0, 0).real(), 1, 1e-15);

    MeasurementOutcomeEnsemble z = measure_party(all_zero(2).density(), {"A"}, {2, {0, 0}});
    EXPECT_NEAR(z.outcomes[1].probability, 0, 1e-15);
    EXPECT_FALSE(z.outcomes[1].state.has_value());
}

TEST(measure_opt, avg_conditional_entropy_matches_oracle_pointwise) {
    DensityMatrix rho = w_like_pair();
    for (double t : {0.0, 0.4, 1.3, 2.9}) {
        for (double f : {0.0, 1.1, 4.0}) {
            double lib = avg_conditional_entropy(rho, {"A"}, {"B"}, {2, {t, f}});
            EXPECT_NEAR(lib, oracle::conditional_entropy_at(rho.matrix(), 0, t, f), 1e-13);
            double lib_b = avg_conditional_entropy(rho, {"B"}, {"A"}, {2, {t, f}});
            EXPECT_NEAR(lib_b, oracle::conditional_entropy_at(rho.matrix(), 1, t, f), 1e-13);
        }
    }
}

TEST(measure_opt, minimum_is_below_grid_oracle) {
    DensityMatrix rho = mix_with_identity(haar_random_mixed(DimensionList::qubits(2), 2, 17), 0.2);
    ConditionalEntropyResult r = min_avg_conditional_entropy(rho, {"A"}, {"B"});
    oracle::GridMin g = oracle::grid_min_conditional_entropy(rho.matrix(), 0, 181, 361);
    EXPECT_LE(r.value, g.value + 1e-9);
    EXPECT_NEAR(r.value, g.value, 1e-4);
    EXPECT_EQ(r.diagnostics.measurement_family, "rank-1 projective");
    EXPECT_EQ(r.diagnostics.restarts, 5);
    EXPECT_GE(r.diagnostics.spread, 0);
}

TEST(measure_opt, search_is_deterministic) {
    DensityMatrix rho = haar_random_mixed(DimensionList::qubits(3), 2, 23);
    ConditionalEntropyResult a = min_avg_conditional_entropy(rho, {"B", "C"}, {"A"});
    ConditionalEntropyResult b = min_avg_conditional_entropy(rho, {"B", "C"}, {"A"});
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.argmin.angles, b.argmin.angles);
    EXPECT_EQ(a.diagnostics.restarts, 64);
}

TEST(measure_opt, composite_measurement_reaches_pure_bound) {
    // Measuring BC of a pure state leaves pure conditional states on A.
    DensityMatrix psi = haar_random_pure(DimensionList::qubits(3), 88).density();
    ConditionalEntropyResult r = min_avg_conditional_entropy(psi, {"B", "C"}, {"A"});
    EXPECT_NEAR(r.value, 0, 1e-9);
}

TEST(measure_opt, minimize_over_bases_generic_objective) {
    // Best qubit basis for <0|u_0|^2 is the computational one.
    auto f = [](const ComplexMatrix &u) { return -std::norm(u(0, 0)); };
    MeasurementSearchResult r = minimize_over_bases(2, f);
    EXPECT_NEAR(r.value, -1, 1e-12);
}
