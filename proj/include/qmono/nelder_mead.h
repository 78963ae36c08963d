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

#ifndef QMONO_NELDER_MEAD_H
#define QMONO_NELDER_MEAD_H

#include <functional>
#include <span>
#include <vector>

namespace qmono {

struct NelderMeadOptions {
    /// Stop once every vertex lies within this Euclidean distance of the best.
    double diameter_tol = 1e-9;
    int max_evaluations = 2000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int evaluations = 0;
    bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Downhill simplex minimization with the standard coefficients (reflect 1,
/// expand 2, contract 1/2, shrink 1/2). The initial simplex is `start` plus
/// one vertex per coordinate displaced by steps[i].
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> start, std::span<const double> steps,
                             const NelderMeadOptions &options = {});

}  // namespace qmono

#endif
