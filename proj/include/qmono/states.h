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

#ifndef QMONO_STATES_H
#define QMONO_STATES_H

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "qmono/linalg.h"

namespace qmono {

/// Pure state: unit-norm amplitudes over a tensor product of subsystems.
class StateVector {
   public:
    /// Throws NotNormalized unless the Euclidean norm is 1 within 1e-10.
    StateVector(DimensionList dims, std::vector<Complex> amplitudes);

    const DimensionList &dims() const noexcept {
        return dims_;
    }
    const std::vector<std::string> &labels() const noexcept {
        return dims_.labels();
    }
    const std::vector<Complex> &amplitudes() const noexcept {
        return amplitudes_;
    }

    /// |psi><psi|
    DensityMatrix density() const;

   private:
    DimensionList dims_;
    std::vector<Complex> amplitudes_;
};

/// sqrt(p eps)|000> + sqrt(p(1-eps))|111> + sqrt((1-p)/2)(|101> + |110>).
StateVector psi_tilde(double p, double eps);

/// sqrt(alpha)|000> + sqrt(1-alpha)|111>.
StateVector ghz_generalized(double alpha);

/// sqrt(a)|100> + sqrt(b)|010> + sqrt(c)|001>, with a + b + c = 1.
StateVector w_generalized(double a, double b, double c);

/// (|0...0> + |1...1>)/sqrt(2) on n qubits.
StateVector ghz(size_t n);

/// |0...0> on n qubits.
StateVector all_zero(size_t n);

/// Seeded generator used by every sampling routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniform doubles take the top 53 bits of one draw, u = (x >> 11) *
/// 2^-53. Standard normals come in pairs from the Box-Muller transform
/// sqrt(-2 ln(1 - u1)) * (cos 2 pi u2, sin 2 pi u2), so sampled values are
/// reproducible across standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    double uniform();
    double normal();
    /// Standard complex Gaussian (independent unit normals on both parts).
    Complex complex_normal();

   private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// Haar-distributed pure state: iid complex Gaussian amplitudes, normalized.
StateVector haar_random_pure(const DimensionList &dims, uint64_t seed);

/// Haar-distributed d x d unitary (Gram-Schmidt on a complex Ginibre matrix).
ComplexMatrix haar_random_unitary(size_t d, uint64_t seed);
ComplexMatrix haar_random_unitary(size_t d, Rng &rng);

/// Reduction of a Haar-random pure state on dims plus an environment of
/// dimension env_dim; the result has rank min(env_dim, dims.total_dim()).
DensityMatrix haar_random_mixed(const DimensionList &dims, size_t env_dim, uint64_t seed);

/// (1 - weight) rho + weight * I/d.
DensityMatrix mix_with_identity(const DensityMatrix &rho, double weight);

/// Applies u to the subsystem `party` of psi.
StateVector apply_local_unitary(const StateVector &psi, const std::string &party, const ComplexMatrix &u);

/// State file I/O. Format:
/// {"dims": [2,2,2], "labels": ["A","B","C"], "matrix": [[re, im], ...]}
/// with the matrix flattened row-major. Loading throws ParseError for
/// malformed content and NotDensityMatrix when validation fails.
DensityMatrix parse_state_json(const std::string &text);
std::string state_to_json(const DensityMatrix &rho);
DensityMatrix load_state(const std::filesystem::path &path);
void save_state(const DensityMatrix &rho, const std::filesystem::path &path);

}  // namespace qmono

#endif
