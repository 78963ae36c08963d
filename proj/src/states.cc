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

#include "qmono/states.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "qmono/errors.h"

namespace qmono {

namespace {

void require_probability(double x, const char *name) {
    if (!(x >= 0 && x <= 1)) {
        throw Error(ErrorCode::OutOfRange, std::string(name) + " must lie in [0, 1]");
    }
}

double norm_of(const std::vector<Complex> &v) {
    double s = 0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

}  // namespace

StateVector::StateVector(DimensionList dims, std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != dims_.total_dim()) {
        throw Error(ErrorCode::OutOfRange, "amplitude count does not match the product of dims");
    }
    double n = norm_of(amplitudes_);
    if (!(std::abs(n - 1) <= 1e-10)) {
        throw Error(ErrorCode::NotNormalized, "state norm is " + std::to_string(n));
    }
}

DensityMatrix StateVector::density() const {
    return DensityMatrix(DensityMatrix::Unchecked{}, dims_, outer(amplitudes_));
}

StateVector psi_tilde(double p, double eps) {
    require_probability(p, "p");
    require_probability(eps, "eps");
    std::vector<Complex> amp(8, 0.0);
    amp[0b000] = std::sqrt(p * eps);
    amp[0b111] = std::sqrt(p * (1 - eps));
    amp[0b101] = std::sqrt((1 - p) / 2);
    amp[0b110] = std::sqrt((1 - p) / 2);
    return StateVector(DimensionList::qubits(3), std::move(amp));
}

StateVector ghz_generalized(double alpha) {
    require_probability(alpha, "alpha");
    std::vector<Complex> amp(8, 0.0);
    amp[0b000] = std::sqrt(alpha);
    amp[0b111] = std::sqrt(1 - alpha);
    return StateVector(DimensionList::qubits(3), std::move(amp));
}

StateVector w_generalized(double a, double b, double c) {
    if (!(a >= 0 && b >= 0 && c >= 0)) {
        throw Error(ErrorCode::OutOfRange, "W weights must be nonnegative");
    }
    if (!(std::abs(a + b + c - 1) <= 1e-10)) {
        throw Error(ErrorCode::NotNormalized, "W weights must sum to 1");
    }
    std::vector<Complex> amp(8, 0.0);
    amp[0b100] = std::sqrt(a);
    amp[0b010] = std::sqrt(b);
    amp[0b001] = std::sqrt(c);
    return StateVector(DimensionList::qubits(3), std::move(amp));
}

StateVector ghz(size_t n) {
    DimensionList dims = DimensionList::qubits(n);
    std::vector<Complex> amp(dims.total_dim(), 0.0);
    amp.front() = std::numbers::sqrt2 / 2;
    amp.back() = std::numbers::sqrt2 / 2;
    return StateVector(std::move(dims), std::move(amp));
}

StateVector all_zero(size_t n) {
    DimensionList dims = DimensionList::qubits(n);
    std::vector<Complex> amp(dims.total_dim(), 0.0);
    amp.front() = 1;
    return StateVector(std::move(dims), std::move(amp));
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2 * std::log(1 - u1));
    double angle = 2 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return r * std::cos(angle);
}

Complex Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
}

StateVector haar_random_pure(const DimensionList &dims, uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> amp(dims.total_dim());
    for (auto &z : amp) {
        z = rng.complex_normal();
    }
    double n = norm_of(amp);
    for (auto &z : amp) {
        z /= n;
    }
    return StateVector(dims, std::move(amp));
}

ComplexMatrix haar_random_unitary(size_t d, Rng &rng) {
    ComplexMatrix u(d, d);
    for (auto &z : u.entries()) {
        z = rng.complex_normal();
    }
    // Modified Gram-Schmidt over columns; equivalent to QR with a positive
    // diagonal in R, which makes the result Haar distributed.
    for (size_t k = 0; k < d; k++) {
        for (size_t j = 0; j < k; j++) {
            Complex proj = 0;
            for (size_t r = 0; r < d; r++) {
                proj += std::conj(u(r, j)) * u(r, k);
            }
            for (size_t r = 0; r < d; r++) {
                u(r, k) -= proj * u(r, j);
            }
        }
        double n = 0;
        for (size_t r = 0; r < d; r++) {
            n += std::norm(u(r, k));
        }
        n = std::sqrt(n);
        for (size_t r = 0; r < d; r++) {
            u(r, k) /= n;
        }
    }
    return u;
}

ComplexMatrix haar_random_unitary(size_t d, uint64_t seed) {
    Rng rng(seed);
    return haar_random_unitary(d, rng);
}

DensityMatrix haar_random_mixed(const DimensionList &dims, size_t env_dim, uint64_t seed) {
    std::vector<size_t> full_dims = dims.dims();
    std::vector<std::string> full_labels = dims.labels();
    std::string env = "__env";
    while (dims.contains(env)) {
        env += "_";
    }
    full_dims.push_back(env_dim);
    full_labels.push_back(env);
    StateVector psi = haar_random_pure(DimensionList(full_dims, full_labels), seed);
    return partial_trace(psi.density(), dims.labels());
}

DensityMatrix mix_with_identity(const DensityMatrix &rho, double weight) {
    require_probability(weight, "weight");
    const size_t d = rho.dim();
    ComplexMatrix m = rho.matrix() * Complex(1 - weight);
    for (size_t k = 0; k < d; k++) {
        m(k, k) += weight / static_cast<double>(d);
    }
    return DensityMatrix(DensityMatrix::Unchecked{}, rho.dims(), std::move(m));
}

StateVector apply_local_unitary(const StateVector &psi, const std::string &party, const ComplexMatrix &u) {
    const DimensionList &dims = psi.dims();
    const size_t k = dims.index_of(party);
    const size_t d = dims.dims()[k];
    if (u.rows() != d || u.cols() != d) {
        throw Error(ErrorCode::OutOfRange, "local unitary does not match the party dimension");
    }
    size_t inner = 1;
    for (size_t j = k + 1; j < dims.size(); j++) {
        inner *= dims.dims()[j];
    }
    const size_t outer_count = dims.total_dim() / (inner * d);
    const auto &in = psi.amplitudes();
    std::vector<Complex> out(in.size(), 0.0);
    for (size_t o = 0; o < outer_count; o++) {
        for (size_t i = 0; i < inner; i++) {
            for (size_t r = 0; r < d; r++) {
                Complex s = 0;
                for (size_t c = 0; c < d; c++) {
                    s += u(r, c) * in[(o * d + c) * inner + i];
                }
                out[(o * d + r) * inner + i] = s;
            }
        }
    }
    // Renormalize away rounding so the norm check stays meaningful.
    double n = norm_of(out);
    for (auto &z : out) {
        z /= n;
    }
    return StateVector(dims, std::move(out));
}

DensityMatrix parse_state_json(const std::string &text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    std::vector<size_t> dims;
    std::vector<std::string> labels;
    std::vector<Complex> entries;
    try {
        if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
            throw Error(ErrorCode::ParseError, "state file needs 'dims' and 'matrix'");
        }
        for (const auto &d : doc.at("dims")) {
            if (!d.is_number_integer() || d.get<long long>() < 2) {
                throw Error(ErrorCode::ParseError, "'dims' entries must be integers >= 2");
            }
            dims.push_back(d.get<size_t>());
        }
        if (doc.contains("labels")) {
            labels = doc.at("labels").get<std::vector<std::string>>();
        } else {
            for (size_t k = 0; k < dims.size(); k++) {
                labels.emplace_back(1, static_cast<char>('A' + k));
            }
        }
        for (const auto &pair : doc.at("matrix")) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
                throw Error(ErrorCode::ParseError, "'matrix' entries must be [re, im] pairs");
            }
            entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("bad state schema: ") + e.what());
    }
    DimensionList dim_list = [&] {
        try {
            return DimensionList(dims, labels);
        } catch (const Error &e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    }();
    const size_t d = dim_list.total_dim();
    if (entries.size() != d * d) {
        throw Error(ErrorCode::ParseError, "'matrix' must hold product(dims)^2 entries");
    }
    return validate_density(ComplexMatrix(d, d, std::move(entries)), dim_list);
}

std::string state_to_json(const DensityMatrix &rho) {
    nlohmann::json doc;
    doc["dims"] = rho.dims().dims();
    doc["labels"] = rho.dims().labels();
    nlohmann::json matrix = nlohmann::json::array();
    for (const auto &z : rho.matrix().entries()) {
        matrix.push_back({z.real(), z.imag()});
    }
    doc["matrix"] = std::move(matrix);
    return doc.dump();
}

DensityMatrix load_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open state file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

void save_state(const DensityMatrix &rho, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot write state file " + path.string());
    }
    out << state_to_json(rho) << "\n";
}

}  // namespace qmono
