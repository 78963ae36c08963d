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

#ifndef QMONO_ENTROPY_H
#define QMONO_ENTROPY_H

#include <span>

#include "qmono/linalg.h"

namespace qmono {

// All entropies are in bits. Eigenvalues below 1e-12 contribute nothing.

double shannon_entropy(std::span<const double> probabilities);

double von_neumann(const DensityMatrix &rho);

/// Entropy of a raw Hermitian, unit-trace, PSD matrix (no subsystem labels).
double matrix_entropy(const ComplexMatrix &m);

/// Entropy of the reduction of rho onto `parties` (0 for the empty set).
double subsystem_entropy(const DensityMatrix &rho, const PartySet &parties);

/// S(target, given) - S(given). Negative values signal entanglement.
double conditional_entropy_unmeasured(const DensityMatrix &rho, const PartySet &target, const PartySet &given);

/// S(a) + S(b) - S(ab).
double mutual_information(const DensityMatrix &rho, const PartySet &a, const PartySet &b);

/// S~(b|given) + S~(c|given) - S~(bc|given).
double cond_mutual_info_unmeasured(const DensityMatrix &rho, const PartySet &b, const PartySet &c,
                                   const PartySet &given);

/// Conditional mutual information of the two non-anchor parties given the
/// anchor, minus their mutual information. Requires exactly three parties.
double interaction_info_unmeasured(const DensityMatrix &rho, const std::string &anchor);

/// Anchor A (the first party).
double interaction_info_unmeasured(const DensityMatrix &rho);

/// S(AB) + S(AC) + S(BC) - S(A) - S(B) - S(C) - S(ABC).
double interaction_info_symmetric(const DensityMatrix &rho);

}  // namespace qmono

#endif
