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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qmono/entropy.h"
#include "qmono/errors.h"
#include "qmono/nelder_mead.h"
#include "qmono/states.h"

namespace qmono {

namespace {

constexpr double kNullProbability = 1e-12;
constexpr double kTieTolerance = 1e-10;

struct PlaneRotation {
    size_t j;
    size_t k;
};

std::vector<PlaneRotation> rotation_planes(size_t d) {
    std::vector<PlaneRotation> planes;
    for (size_t j = 0; j < d; j++) {
        for (size_t k = j + 1; k < d; k++) {
            planes.push_back({j, k});
        }
    }
    return planes;
}

// Multi-party set reordered as (measured..., target...) for fast contraction.
class ConditionalEntropyEvaluator {
   public:
    ConditionalEntropyEvaluator(const DensityMatrix &rho, const PartySet &measured, const PartySet &target)
        : measured_dim_(rho.dims().dim_of(measured)),
          target_dim_(rho.dims().dim_of(target)),
          joint_(partial_trace(rho, join(measured, target)).matrix()) {
    }

    size_t measured_dim() const {
        return measured_dim_;
    }

    double operator()(const ComplexMatrix &basis) const {
        const size_t dm = measured_dim_;
        const size_t dt = target_dim_;
        std::vector<Complex> weight(dm * dm);
        ComplexMatrix sigma(dt, dt);
        double total = 0;
        for (size_t k = 0; k < dm; k++) {
            for (size_t m = 0; m < dm; m++) {
                for (size_t n = 0; n < dm; n++) {
                    weight[m * dm + n] = std::conj(basis(m, k)) * basis(n, k);
                }
            }
            for (size_t t = 0; t < dt; t++) {
                for (size_t u = 0; u < dt; u++) {
                    Complex s = 0;
                    for (size_t m = 0; m < dm; m++) {
                        for (size_t n = 0; n < dm; n++) {
                            s += weight[m * dm + n] * joint_(m * dt + t, n * dt + u);
                        }
                    }
                    sigma(t, u) = s;
                }
            }
            double p = sigma.trace().real();
            if (p < kNullProbability) {
                continue;
            }
            sigma *= Complex(1 / p);
            total += p * matrix_entropy(sigma);
        }
        return total;
    }

   private:
    size_t measured_dim_;
    size_t target_dim_;
    ComplexMatrix joint_;
};

void check_parties(const DensityMatrix &rho, const PartySet &measured, const PartySet &target) {
    if (measured.empty() || target.empty()) {
        throw Error(ErrorCode::OutOfRange, "measured and target party sets must be nonempty");
    }
    for (const auto &p : join(measured, target)) {
        rho.dims().index_of(p);
    }
    require_disjoint({&measured, &target});
}

}  // namespace

size_t measurement_param_count(size_t party_dim) {
    return party_dim * (party_dim - 1);
}

ComplexMatrix basis_from_params(const MeasurementParams &params) {
    const size_t d = params.party_dim;
    if (d < 2 || params.angles.size() != measurement_param_count(d)) {
        throw Error(ErrorCode::BadParamLength, "expected " + std::to_string(measurement_param_count(d)) +
                                                   " angles for a party of dimension " + std::to_string(d));
    }
    if (d == 2) {
        double theta = params.angles[0];
        double phi = params.angles[1];
        double c = std::cos(theta / 2);
        double s = std::sin(theta / 2);
        Complex e = std::polar(1.0, phi);
        ComplexMatrix b(2, 2);
        b(0, 0) = c;
        b(1, 0) = e * s;
        b(0, 1) = -std::conj(e) * s;
        b(1, 1) = c;
        return b;
    }
    // Right-multiply the rotations in order: U = G_01 G_02 ... G_{d-2,d-1}.
    ComplexMatrix u = ComplexMatrix::identity(d);
    auto planes = rotation_planes(d);
    for (size_t idx = 0; idx < planes.size(); idx++) {
        auto [j, k] = planes[idx];
        double c = std::cos(params.angles[2 * idx]);
        double s = std::sin(params.angles[2 * idx]);
        Complex e = std::polar(1.0, params.angles[2 * idx + 1]);
        Complex gjk = -e * s;
        Complex gkj = std::conj(e) * s;
        for (size_t r = 0; r < d; r++) {
            Complex urj = u(r, j);
            Complex urk = u(r, k);
            u(r, j) = urj * c + urk * gkj;
            u(r, k) = urj * gjk + urk * c;
        }
    }
    return u;
}

MeasurementParams params_from_unitary(const ComplexMatrix &u) {
    const size_t d = u.rows();
    if (!u.is_square() || d < 3) {
        throw Error(ErrorCode::BadParamLength, "params_from_unitary needs a square matrix of side > 2");
    }
    // Givens QR: N_last ... N_01 u = diagonal, so u = N_01^dag ... N_last^dag D,
    // and G(t, p)^dag = G(-t, p).
    ComplexMatrix a = u;
    MeasurementParams params{d, std::vector<double>(measurement_param_count(d), 0.0)};
    auto planes = rotation_planes(d);
    for (size_t idx = 0; idx < planes.size(); idx++) {
        auto [j, k] = planes[idx];
        Complex pivot = a(j, j);
        Complex below = a(k, j);
        double theta = std::atan2(std::abs(below), std::abs(pivot));
        double phi = 0;
        if (std::abs(below) > 0 && std::abs(pivot) > 0) {
            phi = -std::arg(-below / pivot);
        }
        double c = std::cos(theta);
        double s = std::sin(theta);
        Complex e = std::polar(1.0, phi);
        for (size_t col = 0; col < d; col++) {
            Complex aj = a(j, col);
            Complex ak = a(k, col);
            a(j, col) = c * aj - e * s * ak;
            a(k, col) = std::conj(e) * s * aj + c * ak;
        }
        params.angles[2 * idx] = -theta;
        params.angles[2 * idx + 1] = phi;
    }
    return params;
}

std::vector<ComplexMatrix> projectors_from_params(const MeasurementParams &params) {
    ComplexMatrix basis = basis_from_params(params);
    const size_t d = params.party_dim;
    std::vector<ComplexMatrix> out;
    std::vector<Complex> column(d);
    for (size_t k = 0; k < d; k++) {
        for (size_t r = 0; r < d; r++) {
            column[r] = basis(r, k);
        }
        out.push_back(outer(column));
    }
    return out;
}

MeasurementOutcomeEnsemble measure_party(const DensityMatrix &rho, const PartySet &party,
                                         const MeasurementParams &params) {
    PartySet rest = rho.dims().complement(party);
    require_disjoint({&party});
    const size_t dm = rho.dims().dim_of(party);
    if (params.party_dim != dm) {
        throw Error(ErrorCode::BadParamLength, "measurement dimension does not match the party");
    }
    ComplexMatrix basis = basis_from_params(params);
    MeasurementOutcomeEnsemble ensemble;
    if (rest.empty()) {
        // Nothing left to condition: probabilities only.
        for (size_t k = 0; k < dm; k++) {
            Complex p = 0;
            for (size_t m = 0; m < dm; m++) {
                for (size_t n = 0; n < dm; n++) {
                    p += std::conj(basis(m, k)) * basis(n, k) * rho.matrix()(m, n);
                }
            }
            ensemble.outcomes.push_back({p.real(), std::nullopt});
        }
        return ensemble;
    }
    const ComplexMatrix joint = partial_trace(rho, join(party, rest)).matrix();
    DimensionList rest_dims = rho.dims().subset(rest);
    const size_t dt = rest_dims.total_dim();
    for (size_t k = 0; k < dm; k++) {
        ComplexMatrix sigma(dt, dt);
        for (size_t t = 0; t < dt; t++) {
            for (size_t u = 0; u < dt; u++) {
                Complex s = 0;
                for (size_t m = 0; m < dm; m++) {
                    for (size_t n = 0; n < dm; n++) {
                        s += std::conj(basis(m, k)) * basis(n, k) * joint(m * dt + t, n * dt + u);
                    }
                }
                sigma(t, u) = s;
            }
        }
        double p = sigma.trace().real();
        if (p < kNullProbability) {
            ensemble.outcomes.push_back({std::max(p, 0.0), std::nullopt});
            continue;
        }
        sigma *= Complex(1 / p);
        ensemble.outcomes.push_back({p, DensityMatrix(DensityMatrix::Unchecked{}, rest_dims, std::move(sigma))});
    }
    return ensemble;
}

double avg_conditional_entropy(const DensityMatrix &rho, const PartySet &measured, const PartySet &target,
                               const MeasurementParams &params) {
    check_parties(rho, measured, target);
    ConditionalEntropyEvaluator eval(rho, measured, target);
    if (params.party_dim != eval.measured_dim()) {
        throw Error(ErrorCode::BadParamLength, "measurement dimension does not match the party");
    }
    return eval(basis_from_params(params));
}

MeasurementSearchResult minimize_over_bases(size_t party_dim,
                                            const std::function<double(const ComplexMatrix &)> &basis_objective,
                                            const OptimizerOptions &options) {
    const size_t d = party_dim;
    auto objective = [&](std::span<const double> x) {
        return basis_objective(basis_from_params(MeasurementParams{d, std::vector<double>(x.begin(), x.end())}));
    };

    std::vector<std::vector<double>> starts;
    std::vector<double> steps;
    int evaluations = 0;
    if (d == 2) {
        const double dtheta = std::numbers::pi / (options.grid_theta - 1);
        const double dphi = 2 * std::numbers::pi / options.grid_phi;
        std::vector<std::pair<double, std::vector<double>>> cells;
        for (int i = 0; i < options.grid_theta; i++) {
            for (int j = 0; j < options.grid_phi; j++) {
                std::vector<double> x{i * dtheta, j * dphi};
                cells.emplace_back(objective(x), x);
                evaluations++;
            }
        }
        std::stable_sort(cells.begin(), cells.end(), [](const auto &a, const auto &b) {
            return a.first < b.first;
        });
        for (int k = 0; k < std::min<int>(options.grid_refine, static_cast<int>(cells.size())); k++) {
            starts.push_back(cells[k].second);
        }
        steps = {dtheta, dphi};
    } else {
        Rng rng(options.seed);
        for (int k = 0; k < options.random_starts; k++) {
            starts.push_back(params_from_unitary(haar_random_unitary(d, rng)).angles);
        }
        steps.assign(measurement_param_count(d), 0.25);
    }

    NelderMeadOptions nm{options.diameter_tol, options.max_evaluations};
    MeasurementSearchResult best;
    best.value = INFINITY;
    OptimizerDiagnostics diag;
    for (size_t s = 0; s < starts.size(); s++) {
        NelderMeadResult r = nelder_mead(objective, starts[s], steps, nm);
        evaluations += r.evaluations;
        diag.start_minima.push_back(r.value);
        if (!std::isfinite(best.value) || r.value < best.value - kTieTolerance) {
            best.value = r.value;
            best.argmin = MeasurementParams{d, r.x};
            diag.best_start = static_cast<int>(s);
        }
    }
    diag.restarts = static_cast<int>(starts.size());
    diag.evaluations = evaluations;
    auto [lo, hi] = std::minmax_element(diag.start_minima.begin(), diag.start_minima.end());
    diag.spread = *hi - *lo;
    best.diagnostics = std::move(diag);
    return best;
}

ConditionalEntropyResult min_avg_conditional_entropy(const DensityMatrix &rho, const PartySet &measured,
                                                     const PartySet &target, const OptimizerOptions &options) {
    check_parties(rho, measured, target);
    const ConditionalEntropyEvaluator eval(rho, measured, target);
    return minimize_over_bases(eval.measured_dim(), std::cref(eval), options);
}

}  // namespace qmono
