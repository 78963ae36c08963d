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

#include "qmono/entropy.h"

#include <algorithm>
#include <cmath>

#include "qmono/errors.h"

namespace qmono {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

void require_three_parties(const DensityMatrix &rho) {
    if (rho.dims().size() != 3) {
        throw Error(ErrorCode::WrongArity, "interaction information needs exactly three parties");
    }
}

}  // namespace

double shannon_entropy(std::span<const double> probabilities) {
    double s = 0;
    for (double p : probabilities) {
        if (p >= kEigenvalueFloor) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

double von_neumann(const DensityMatrix &rho) {
    return matrix_entropy(rho.matrix());
}

double matrix_entropy(const ComplexMatrix &m) {
    if (m.rows() == 1) {
        return 0;
    }
    if (m.rows() == 2) {
        // Closed-form spectrum; same floor as the general path.
        double a = m(0, 0).real();
        double d = m(1, 1).real();
        double mid = 0.5 * (a + d);
        double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
        double ev[2] = {mid + rad, mid - rad};
        return shannon_entropy(ev);
    }
    std::vector<double> ev = hermitian_eigenvalues(m);
    return shannon_entropy(ev);
}

double subsystem_entropy(const DensityMatrix &rho, const PartySet &parties) {
    if (parties.empty()) {
        return 0;
    }
    require_disjoint({&parties});
    // Entropy is permutation invariant; fixing the order makes S(ab) and S(ba)
    // the same floating-point computation.
    for (const auto &p : parties) {
        rho.dims().index_of(p);
    }
    PartySet ordered = parties;
    std::sort(ordered.begin(), ordered.end(), [&](const std::string &x, const std::string &y) {
        return rho.dims().index_of(x) < rho.dims().index_of(y);
    });
    if (ordered.size() == rho.dims().size()) {
        return von_neumann(rho);
    }
    return von_neumann(partial_trace(rho, ordered));
}

double conditional_entropy_unmeasured(const DensityMatrix &rho, const PartySet &target, const PartySet &given) {
    require_disjoint({&target, &given});
    return subsystem_entropy(rho, join(target, given)) - subsystem_entropy(rho, given);
}

double mutual_information(const DensityMatrix &rho, const PartySet &a, const PartySet &b) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorCode::OutOfRange, "mutual information needs nonempty party sets");
    }
    require_disjoint({&a, &b});
    double sa = subsystem_entropy(rho, a);
    double sb = subsystem_entropy(rho, b);
    // Sum the marginals in a fixed order so that I(a:b) == I(b:a) exactly.
    double marginals = sa < sb ? sa + sb : sb + sa;
    return marginals - subsystem_entropy(rho, join(a, b));
}

double cond_mutual_info_unmeasured(const DensityMatrix &rho, const PartySet &b, const PartySet &c,
                                   const PartySet &given) {
    require_disjoint({&b, &c, &given});
    return conditional_entropy_unmeasured(rho, b, given) + conditional_entropy_unmeasured(rho, c, given) -
           conditional_entropy_unmeasured(rho, join(b, c), given);
}

double interaction_info_unmeasured(const DensityMatrix &rho, const std::string &anchor) {
    require_three_parties(rho);
    PartySet rest = rho.dims().complement({anchor});
    PartySet b{rest[0]};
    PartySet c{rest[1]};
    return cond_mutual_info_unmeasured(rho, b, c, {anchor}) - mutual_information(rho, b, c);
}

double interaction_info_unmeasured(const DensityMatrix &rho) {
    require_three_parties(rho);
    return interaction_info_unmeasured(rho, rho.labels()[0]);
}

double interaction_info_symmetric(const DensityMatrix &rho) {
    require_three_parties(rho);
    const auto &l = rho.labels();
    return subsystem_entropy(rho, {l[0], l[1]}) + subsystem_entropy(rho, {l[0], l[2]}) +
           subsystem_entropy(rho, {l[1], l[2]}) - subsystem_entropy(rho, {l[0]}) - subsystem_entropy(rho, {l[1]}) -
           subsystem_entropy(rho, {l[2]}) - von_neumann(rho);
}

}  // namespace qmono
