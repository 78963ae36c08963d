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

#include <algorithm>
#include <cmath>

#include "qmono/entropy.h"
#include "qmono/errors.h"

namespace qmono {

namespace {

constexpr double kPurityTolerance = 1e-8;
constexpr size_t kMaxMeasuredDim = 4;
constexpr double kSupportFloor = 1e-14;

ComplexMatrix spin_flip_2q() {
    // Y x Y for Y = [[0, -i], [i, 0]] is the real anti-diagonal (-1, 1, 1, -1).
    ComplexMatrix yy(4, 4);
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1;
    return yy;
}

void require_two_qubits(const DensityMatrix &rho) {
    if (rho.dims().size() != 2 || rho.dims().dims()[0] != 2 || rho.dims().dims()[1] != 2) {
        throw Error(ErrorCode::WrongArity, "two-qubit state required");
    }
}

}  // namespace

bool is_pure(const DensityMatrix &rho) {
    return rho.purity() >= 1 - kPurityTolerance;
}

DiscordResult discord_from_conditional(const DensityMatrix &rho, const PartySet &measured, const PartySet &target,
                                       ConditionalEntropyResult conditional) {
    DiscordResult r;
    r.mutual = mutual_information(rho, measured, target);
    r.target_entropy = subsystem_entropy(rho, target);
    r.classical = r.target_entropy - conditional.value;
    r.discord = r.mutual - r.classical;
    r.conditional = std::move(conditional);
    return r;
}

DiscordResult discord(const DensityMatrix &rho, const PartySet &measured, const PartySet &target,
                      const OptimizerOptions &options) {
    return discord_from_conditional(rho, measured, target,
                                    min_avg_conditional_entropy(rho, measured, target, options));
}

double discord_bipartition(const DensityMatrix &rho_pure, const std::string &anchor, const PartySet &rest,
                           Direction direction, const OptimizerOptions &options) {
    if (!is_pure(rho_pure)) {
        throw Error(ErrorCode::NotPure, "bipartition discord needs a pure state");
    }
    PartySet anchor_set{anchor};
    require_disjoint({&anchor_set, &rest});
    if (anchor_set.size() + rest.size() != rho_pure.dims().size()) {
        throw Error(ErrorCode::OutOfRange, "anchor and rest must cover every party");
    }
    if (direction == Direction::Left) {
        return subsystem_entropy(rho_pure, anchor_set);
    }
    return discord(rho_pure, anchor_set, rest, options).discord;
}

double discord_bipartition(const StateVector &psi, const std::string &anchor, const PartySet &rest,
                           Direction direction, const OptimizerOptions &options) {
    return discord_bipartition(psi.density(), anchor, rest, direction, options);
}

InterrogatedTerms interrogated_terms(const DensityMatrix &rho, const std::string &anchor,
                                     const OptimizerOptions &options) {
    if (rho.dims().size() != 3) {
        throw Error(ErrorCode::WrongArity, "interrogated quantities need exactly three parties");
    }
    PartySet rest = rho.dims().complement({anchor});
    InterrogatedTerms t;
    t.anchor = anchor;
    t.b = {rest[0]};
    t.c = {rest[1]};
    t.given_b = min_avg_conditional_entropy(rho, {anchor}, t.b, options);
    t.given_c = min_avg_conditional_entropy(rho, {anchor}, t.c, options);
    t.given_bc = min_avg_conditional_entropy(rho, {anchor}, rest, options);
    return t;
}

double interrogated_cmi(const InterrogatedTerms &terms) {
    return terms.given_b.value + terms.given_c.value - terms.given_bc.value;
}

double interrogated_cmi(const DensityMatrix &rho, const std::string &anchor, const OptimizerOptions &options) {
    return interrogated_cmi(interrogated_terms(rho, anchor, options));
}

double interrogated_interaction_info(const DensityMatrix &rho, const InterrogatedTerms &terms) {
    return interrogated_cmi(terms) - mutual_information(rho, terms.b, terms.c);
}

double interrogated_interaction_info(const DensityMatrix &rho, const std::string &anchor,
                                     const OptimizerOptions &options) {
    return interrogated_interaction_info(rho, interrogated_terms(rho, anchor, options));
}

double binary_entropy(double x) {
    double probs[2] = {x, 1 - x};
    return shannon_entropy(probs);
}

double concurrence_2q(const DensityMatrix &rho) {
    require_two_qubits(rho);
    // With rho = W W^dagger over the support, the spin-flip eigenvalues are the
    // squared singular values of tau = W^T (Y x Y) W. Working on the support
    // keeps exact zeros exact for low-rank inputs.
    EigenSystem eig = hermitian_eig(rho.matrix());
    std::vector<std::vector<Complex>> w;
    for (size_t k = 0; k < 4; k++) {
        if (eig.values[k] > kSupportFloor) {
            std::vector<Complex> col(4);
            for (size_t r = 0; r < 4; r++) {
                col[r] = std::sqrt(eig.values[k]) * eig.vectors(r, k);
            }
            w.push_back(std::move(col));
        }
    }
    const ComplexMatrix yy = spin_flip_2q();
    const size_t n = w.size();
    ComplexMatrix tau(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t r = 0; r < 4; r++) {
                for (size_t c = 0; c < 4; c++) {
                    tau(i, j) += w[i][r] * yy(r, c) * w[j][c];
                }
            }
        }
    }
    std::vector<double> ev = hermitian_eigenvalues(tau * tau.adjoint());
    double l[4] = {0, 0, 0, 0};
    for (size_t k = 0; k < n; k++) {
        l[k] = std::sqrt(std::max(ev[k], 0.0));
    }
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double eof_from_concurrence(double concurrence) {
    double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy((1 + std::sqrt(1 - c * c)) / 2);
}

double eof_2q(const DensityMatrix &rho) {
    return eof_from_concurrence(concurrence_2q(rho));
}

WorkDeficitResult work_deficit_search(const DensityMatrix &rho, const PartySet &measured,
                                      const OptimizerOptions &options) {
    require_disjoint({&measured});
    PartySet rest = rho.dims().complement(measured);
    const size_t dm = rho.dims().dim_of(measured);
    if (dm > kMaxMeasuredDim) {
        throw Error(ErrorCode::OutOfRange, "work deficit supports measured parties of dimension <= 4");
    }
    const double total_entropy = von_neumann(rho);
    const ComplexMatrix joint = partial_trace(rho, join(measured, rest)).matrix();
    const size_t dt = joint.rows() / dm;

    // The dephased state is block diagonal: sum_k |u_k><u_k| x sigma_k, so its
    // entropy is H(p) + sum_k p_k S(sigma_k / p_k).
    auto objective = [&](const ComplexMatrix &basis) {
        std::vector<double> probs;
        double conditional = 0;
        ComplexMatrix sigma(dt, dt);
        for (size_t k = 0; k < dm; k++) {
            for (size_t t = 0; t < dt; t++) {
                for (size_t u = 0; u < dt; u++) {
                    Complex s = 0;
                    for (size_t a = 0; a < dm; a++) {
                        for (size_t b = 0; b < dm; b++) {
                            s += std::conj(basis(a, k)) * basis(b, k) * joint(a * dt + t, b * dt + u);
                        }
                    }
                    sigma(t, u) = s;
                }
            }
            double p = sigma.trace().real();
            probs.push_back(p);
            if (p < 1e-12) {
                continue;
            }
            sigma *= Complex(1 / p);
            conditional += p * (dt == 1 ? 0.0 : matrix_entropy(sigma));
        }
        return shannon_entropy(probs) + conditional - total_entropy;
    };
    WorkDeficitResult r;
    r.search = minimize_over_bases(dm, objective, options);
    r.value = r.search.value;
    return r;
}

double work_deficit_oneway(const DensityMatrix &rho, const PartySet &measured, const OptimizerOptions &options) {
    return work_deficit_search(rho, measured, options).value;
}

namespace {

PairCorrelations pair_correlations(const DensityMatrix &rho, const PartySet &x, const PartySet &y, bool whole_pure,
                                   const OptimizerOptions &options) {
    PairCorrelations pc;
    pc.first = x;
    pc.second = y;
    pc.entropy_first = subsystem_entropy(rho, x);
    pc.entropy_second = subsystem_entropy(rho, y);
    pc.mutual = mutual_information(rho, x, y);
    DensityMatrix reduced = partial_trace(rho, join(x, y));
    if (rho.dims().dim_of(x) <= kMaxMeasuredDim) {
        DiscordResult d = discord(reduced, x, y, options);
        pc.classical_right = d.classical;
        pc.discord_right = d.discord;
        pc.diagnostics.push_back(d.conditional.diagnostics);
        pc.work_deficit_right = work_deficit_oneway(reduced, x, options);
    } else if (whole_pure) {
        pc.classical_right = pc.entropy_first;
        pc.discord_right = pc.entropy_first;
        pc.work_deficit_right = pc.entropy_first;
    }
    if (rho.dims().dim_of(y) <= kMaxMeasuredDim) {
        DiscordResult d = discord(reduced, y, x, options);
        pc.classical_left = d.classical;
        pc.discord_left = d.discord;
        pc.diagnostics.push_back(d.conditional.diagnostics);
        pc.work_deficit_left = work_deficit_oneway(reduced, y, options);
    } else if (whole_pure) {
        pc.classical_left = pc.entropy_second;
        pc.discord_left = pc.entropy_second;
        pc.work_deficit_left = pc.entropy_second;
    }
    if (whole_pure) {
        pc.eof = pc.entropy_first;
    } else if (reduced.dims().dims() == std::vector<size_t>{2, 2}) {
        pc.eof = eof_2q(reduced);
    }
    return pc;
}

}  // namespace

CorrelationReport correlation_report(const DensityMatrix &rho, const OptimizerOptions &options) {
    CorrelationReport report;
    report.dims = rho.dims();
    report.pure = is_pure(rho);
    const auto &labels = rho.labels();
    for (const auto &l : labels) {
        report.entropies.emplace_back(PartySet{l}, subsystem_entropy(rho, {l}));
    }
    report.entropies.emplace_back(labels, von_neumann(rho));
    const bool two_party_pure = labels.size() == 2 && report.pure;
    for (size_t i = 0; i < labels.size(); i++) {
        for (size_t j = i + 1; j < labels.size(); j++) {
            report.pairs.push_back(pair_correlations(rho, {labels[i]}, {labels[j]}, two_party_pure, options));
        }
    }
    if (labels.size() >= 3) {
        for (const auto &l : labels) {
            report.bipartitions.push_back(
                pair_correlations(rho, {l}, rho.dims().complement({l}), report.pure, options));
        }
    }
    return report;
}

}  // namespace qmono
