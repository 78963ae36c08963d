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

#ifndef QMONO_CORRELATIONS_H
#define QMONO_CORRELATIONS_H

#include <optional>
#include <string>
#include <vector>

#include "qmono/linalg.h"
#include "qmono/measure_opt.h"
#include "qmono/states.h"

namespace qmono {

/// Quantum discord with the measurement on `measured`.
///
/// Arrow convention: D->(rho_XY) measures X, D<-(rho_XY) measures Y. All
/// values in bits; discord + classical == mutual by construction.
struct DiscordResult {
    double discord = 0;
    /// Classical correlation S(target) - min sum_i p_i S(target|i).
    double classical = 0;
    double mutual = 0;
    double target_entropy = 0;
    ConditionalEntropyResult conditional;
};

DiscordResult discord(const DensityMatrix &rho, const PartySet &measured, const PartySet &target,
                      const OptimizerOptions &options = {});

/// Discord built from an already optimized conditional entropy, so several
/// quantities can share one optimizer output.
DiscordResult discord_from_conditional(const DensityMatrix &rho, const PartySet &measured, const PartySet &target,
                                       ConditionalEntropyResult conditional);

enum class Direction {
    /// Measurement on the anchor.
    Right,
    /// Measurement on the rest.
    Left,
};

/// Discord of a pure state across anchor | rest. Left returns S(anchor);
/// Right runs the optimizer with the measurement on the anchor.
/// Throws NotPure if Tr rho^2 < 1 - 1e-8.
double discord_bipartition(const DensityMatrix &rho_pure, const std::string &anchor, const PartySet &rest,
                           Direction direction, const OptimizerOptions &options = {});
double discord_bipartition(const StateVector &psi, const std::string &anchor, const PartySet &rest,
                           Direction direction, const OptimizerOptions &options = {});

/// Per-term optimal conditional entropies of the two non-anchor parties B, C
/// (and of BC jointly) after measuring the anchor.
struct InterrogatedTerms {
    std::string anchor;
    PartySet b;
    PartySet c;
    ConditionalEntropyResult given_b;
    ConditionalEntropyResult given_c;
    ConditionalEntropyResult given_bc;
};

InterrogatedTerms interrogated_terms(const DensityMatrix &rho, const std::string &anchor,
                                     const OptimizerOptions &options = {});

/// S(B|A) + S(C|A) - S(BC|A), each term optimized independently.
double interrogated_cmi(const InterrogatedTerms &terms);
double interrogated_cmi(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options = {});

/// interrogated_cmi - I~(B:C).
double interrogated_interaction_info(const DensityMatrix &rho, const InterrogatedTerms &terms);
double interrogated_interaction_info(const DensityMatrix &rho, const std::string &anchor,
                                     const OptimizerOptions &options = {});

/// Binary entropy in bits.
double binary_entropy(double x);

/// Two-qubit concurrence max(0, l1 - l2 - l3 - l4) from the spin-flipped
/// spectrum of rho (Y x Y) rho* (Y x Y).
double concurrence_2q(const DensityMatrix &rho);

/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double concurrence);
double eof_2q(const DensityMatrix &rho);

/// min over projective dephasings of `measured` of S(sum_i P_i rho P_i) - S(rho).
struct WorkDeficitResult {
    double value = 0;
    MeasurementSearchResult search;
};

WorkDeficitResult work_deficit_search(const DensityMatrix &rho, const PartySet &measured,
                                      const OptimizerOptions &options = {});
double work_deficit_oneway(const DensityMatrix &rho, const PartySet &measured, const OptimizerOptions &options = {});

/// Correlations between two disjoint party sets X and Y. "right" quantities
/// measure X, "left" quantities measure Y.
struct PairCorrelations {
    PartySet first;
    PartySet second;
    double entropy_first = 0;
    double entropy_second = 0;
    double mutual = 0;
    std::optional<double> classical_right;
    std::optional<double> classical_left;
    std::optional<double> discord_right;
    std::optional<double> discord_left;
    /// Two-qubit EOF, or entanglement entropy when the pair is the whole pure state.
    std::optional<double> eof;
    std::optional<double> work_deficit_right;
    std::optional<double> work_deficit_left;
    std::vector<OptimizerDiagnostics> diagnostics;
};

struct CorrelationReport {
    DimensionList dims;
    bool pure = false;
    /// S of each single party and of the whole state.
    std::vector<std::pair<PartySet, double>> entropies;
    std::vector<PairCorrelations> pairs;
    /// Single party vs the rest (three or more parties only).
    std::vector<PairCorrelations> bipartitions;
};

/// Everything above for one state. Optimizations are restricted to measured
/// parties of dimension <= 4; larger measured sets are left empty unless a
/// pure-state closed form applies.
CorrelationReport correlation_report(const DensityMatrix &rho, const OptimizerOptions &options = {});

bool is_pure(const DensityMatrix &rho);

}  // namespace qmono

#endif
