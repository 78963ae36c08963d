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

#ifndef QMONO_MONOGAMY_H
#define QMONO_MONOGAMY_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmono/correlations.h"

namespace qmono {

/// Acceptance bands for the numerical identity checks. Optimizer-limited
/// identities get loose bands, algebraic ones tight bands.
namespace tolerance {
constexpr double kIdentity = 5e-4;
constexpr double kDifference = 1e-3;
constexpr double kRouteAgreement = 1e-3;
constexpr double kDecomposition = 1e-9;
constexpr double kRecursionRight = 5e-3;
constexpr double kRecursionLeft = 1e-2;
constexpr double kSquashed = 1e-3;
constexpr double kWorkDeficit = 5e-4;
constexpr double kClassify = 1e-4;
constexpr double kGenuine = 1e-6;
}  // namespace tolerance

enum class DeficitRoute { Optimized, PureClosedForm };
enum class Classification { GhzClass, WClass, NotApplicable };

const char *route_name(DeficitRoute route);
const char *classification_name(Classification c);

/// Symmetrized correlations of a pair X|Y, averaging the two measurement
/// directions. omega_I + omega_D equals the mutual information.
struct AverageCorrelations {
    double omega_I = 0;
    double omega_D = 0;
    std::vector<OptimizerDiagnostics> diagnostics;
};

AverageCorrelations average_correlations(const DensityMatrix &rho, const PartySet &x, const PartySet &y,
                                         const OptimizerOptions &options = {});

/// Every optimized pair and bipartition quantity of a pure three-qubit state,
/// computed once so that all identities reuse the same optimizer outputs.
/// Indices follow the state's label order.
struct TripartiteAnalysis {
    PartySet labels;
    std::array<double, 3> entropy{};
    /// pair[i][j]: discord of rho_ij measured on i (unused when i == j).
    std::array<std::array<DiscordResult, 3>, 3> pair;
    /// bipartition[i]: discord of i | rest measured on i.
    std::array<DiscordResult, 3> bipartition;
    /// eof[i][j] = eof_2q(rho_ij).
    std::array<std::array<double, 3>, 3> eof{};

    size_t index_of(const std::string &label) const;

    /// Optimized routes.
    double delta_right(size_t i) const;
    double delta_left(size_t i) const;
    /// Pure-state closed forms from entropies and pair EOFs.
    double delta_right_closed(size_t i) const;
    double delta_left_closed(size_t i) const;
    /// Averages over the pair (i, j) built from the shared pair results.
    double omega_I(size_t i, size_t j) const;
    double omega_D(size_t i, size_t j) const;
    double max_spread() const;
};

/// Throws NotPure for mixed input and WrongArity unless there are three qubits.
TripartiteAnalysis analyze_tripartite(const DensityMatrix &psi, const OptimizerOptions &options = {});

/// Residuals on a shared analysis. `a`, `b`, `c` are party indices; the
/// anchor-free roles take the remaining two parties in label order.
double residual_left_from_right(const TripartiteAnalysis &t, size_t a);
double residual_right_from_left(const TripartiteAnalysis &t, size_t a);
double residual_deficit_difference(const TripartiteAnalysis &t, size_t c);
std::pair<double, double> residual_lami_limi(const TripartiteAnalysis &t, size_t b);
double residual_average_correlations(const TripartiteAnalysis &t, size_t c);

/// Stand-alone checks in the canonical roles (first, second, third label =
/// A, B, C): the left/right relations are anchored on A, the deficit
/// difference and average-correlation identities on C.
double check_left_from_right(const DensityMatrix &psi, const OptimizerOptions &options = {});
double check_right_from_left(const DensityMatrix &psi, const OptimizerOptions &options = {});
double check_deficit_difference(const DensityMatrix &psi, const OptimizerOptions &options = {});
std::pair<double, double> check_lami_limi(const DensityMatrix &psi, const std::string &anchor,
                                              const OptimizerOptions &options = {});
double check_average_correlations(const DensityMatrix &psi, const OptimizerOptions &options = {});

/// D->(anchor | rest) - sum_i D->(anchor, i), every discord measured on the
/// single-qubit anchor. Works for any number of parties.
double deficit_right(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options = {});

/// D<-(anchor | rest) - sum_i D<-(anchor, i). Pure three-qubit input uses the
/// closed form. Otherwise the first term is S(anchor) for pure input or an
/// optimization over the composite rest (dimension <= 4), which can only
/// overestimate the conditional entropy and is reported as heuristic.
double deficit_left(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options = {});

/// S(B) + S(C) - S(A) - 2 E(BC) for anchor A of a pure three-qubit state.
double deficit_right_closed_form(const DensityMatrix &psi, const std::string &anchor);
/// S(A) - E(AB) - E(AC).
double deficit_left_closed_form(const DensityMatrix &psi, const std::string &anchor);

struct DeficitReport {
    std::string anchor;
    std::optional<double> delta_left;
    double delta_right = 0;
    DeficitRoute route = DeficitRoute::Optimized;
    bool left_heuristic = false;
    std::map<std::string, double> identity_residuals;
    Classification classification = Classification::NotApplicable;
    bool classification_boundary = false;
};

/// Pure three-qubit states report the closed forms, cross-checked against the
/// optimized routes ("route_left", "route_right") and every identity anchored
/// on `anchor`. Other states report optimized values only.
DeficitReport deficit_report(const DensityMatrix &rho, const std::string &anchor,
                             const OptimizerOptions &options = {});

struct ClassificationResult {
    Classification verdict = Classification::NotApplicable;
    /// Closed-form D<- deficit anchored on the third party.
    double delta_left_c = 0;
    /// True when the value falls inside the tolerance band around zero.
    bool boundary = false;
};

/// GHZ class iff the third party's left deficit is >= -1e-4. States with any
/// single-party entropy below 1e-6 are not genuinely tripartite.
ClassificationResult classify_ghz_w(const DensityMatrix &psi);

/// |D->_anchor - (I~_anchor - I_anchor)| with both sides assembled from the
/// same per-term conditional entropy optima.
struct InteractionDecomposition {
    double delta_right = 0;
    double unmeasured_interaction = 0;
    double interrogated_interaction = 0;
    double residual = 0;
};

InteractionDecomposition interaction_decomposition(const DensityMatrix &rho, const std::string &anchor,
                             const OptimizerOptions &options = {});
double interaction_decomposition_residual(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options = {});

/// D->(A1 | A2..AN) - sum_i D->(A1 Ai) for pure input, using S(A1) for the
/// first term.
double deficit_right_npartite(const DensityMatrix &psi, const std::string &anchor,
                              const OptimizerOptions &options = {});

struct RecursionCheck {
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    /// Largest per-start spread among the optimizations involved.
    double max_spread = 0;
    std::vector<OptimizerDiagnostics> diagnostics;
};

/// Delta->(N) - Delta->(N-1) against I->(A1 AN) - D->(A1 AN), where the
/// N-1 deficit lives on the reduction to the first N-1 parties.
RecursionCheck check_recursion_right(const DensityMatrix &psi, const OptimizerOptions &options = {});

/// Delta<-(N) - Delta<-(N-1) against omega_I - omega_D of the pair
/// (A2..A_{N-1}) | AN. Needs composite-party optimizations.
RecursionCheck check_recursion_left(const DensityMatrix &psi, const OptimizerOptions &options = {});

/// Entanglement deficit S(anchor) - E(anchor, x) - E(anchor, y) against the
/// optimized left discord deficit. Squashed entanglement itself is never
/// evaluated: the lower bound max(delta_left, 0) follows from the identity.
struct SquashedReport {
    double delta_eof = 0;
    double delta_left = 0;
    double residual = 0;
    double implied_lower_bound = 0;
    std::string bound_status = "implied_by_identity";
};

SquashedReport squashed_bound_pure(const DensityMatrix &psi, const std::string &anchor,
                                   const OptimizerOptions &options = {});

/// One-way work deficit analogues of both deficits next to the discord ones.
struct WorkDeficitBounds {
    double delta_left_wd = 0;
    double delta_right_wd = 0;
    double delta_left_discord = 0;
    double delta_right_discord = 0;
    bool holds = false;
};

WorkDeficitBounds work_deficit_bounds(const DensityMatrix &psi, const std::string &anchor,
                                      const OptimizerOptions &options = {});

}  // namespace qmono

#endif
