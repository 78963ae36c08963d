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

#ifndef QMONO_MEASURE_OPT_H
#define QMONO_MEASURE_OPT_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmono/linalg.h"

namespace qmono {

/// Real parametrization of a rank-1 orthogonal projective measurement on a
/// party of dimension d.
///
/// d = 2: Bloch angles (theta, phi); outcome vectors
///   (cos theta/2, e^{i phi} sin theta/2) and (-e^{-i phi} sin theta/2, cos theta/2).
/// d > 2: d(d-1) numbers, one (angle, phase) pair per index pair j < k in
///   lexicographic order. The basis is the columns of G_01 G_02 ... G_{d-2,d-1},
///   where G_jk rotates the (j, k) plane with entries
///   [[cos t, -e^{i p} sin t], [e^{-i p} sin t, cos t]].
///   Every orthonormal basis is reachable up to per-vector phases.
struct MeasurementParams {
    size_t party_dim = 2;
    std::vector<double> angles;
};

size_t measurement_param_count(size_t party_dim);

/// Orthonormal measurement basis; column k is outcome k.
ComplexMatrix basis_from_params(const MeasurementParams &params);

/// Inverse of basis_from_params for d > 2 (up to per-column phases).
MeasurementParams params_from_unitary(const ComplexMatrix &u);

std::vector<ComplexMatrix> projectors_from_params(const MeasurementParams &params);

struct MeasurementOutcome {
    double probability = 0;
    /// Post-measurement state of the unmeasured parties; empty when the
    /// probability is below 1e-12.
    std::optional<DensityMatrix> state;
};

struct MeasurementOutcomeEnsemble {
    std::vector<MeasurementOutcome> outcomes;
};

/// p_i = Tr[(P_i x I) rho], rho_i = Tr_party[(P_i x I) rho (P_i x I)] / p_i.
/// The conditional states live on the remaining parties in rho's order.
MeasurementOutcomeEnsemble measure_party(const DensityMatrix &rho, const PartySet &party,
                                         const MeasurementParams &params);

/// Knobs of the multi-start simplex search.
struct OptimizerOptions {
    /// Seeds the Haar-random starting bases used for composite parties.
    uint64_t seed = 20130901;
    /// Coarse (theta, phi) grid for qubit parties and the number of best
    /// cells refined by the simplex.
    int grid_theta = 13;
    int grid_phi = 25;
    int grid_refine = 5;
    /// Starts for parties of dimension > 2.
    int random_starts = 64;
    double diameter_tol = 1e-9;
    int max_evaluations = 2000;
};

struct OptimizerDiagnostics {
    int restarts = 0;
    int evaluations = 0;
    /// max - min over the per-start local minima.
    double spread = 0;
    /// Index of the start that produced the reported minimum.
    int best_start = 0;
    std::vector<double> start_minima;
    std::string measurement_family = "rank-1 projective";
};

/// Outcome of a search over the projective family.
struct MeasurementSearchResult {
    double value = 0;
    MeasurementParams argmin;
    OptimizerDiagnostics diagnostics;
};

using ConditionalEntropyResult = MeasurementSearchResult;

/// Minimizes objective(basis) over orthonormal bases of a d-dimensional party:
/// qubits are seeded from the coarse grid, larger parties from Haar-random
/// bases, and every start is polished by Nelder-Mead.
MeasurementSearchResult minimize_over_bases(size_t party_dim,
                                            const std::function<double(const ComplexMatrix &)> &objective,
                                            const OptimizerOptions &options = {});

/// sum_i p_i S(rho_target|i) for one fixed measurement on `measured`.
double avg_conditional_entropy(const DensityMatrix &rho, const PartySet &measured, const PartySet &target,
                               const MeasurementParams &params);

/// Minimum of avg_conditional_entropy over the projective family. Starts are
/// processed in index order and a later start only replaces the incumbent if it
/// is lower by more than 1e-10, so results are reproducible bit for bit.
ConditionalEntropyResult min_avg_conditional_entropy(const DensityMatrix &rho, const PartySet &measured,
                                                     const PartySet &target, const OptimizerOptions &options = {});

}  // namespace qmono

#endif
