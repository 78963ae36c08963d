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

#ifndef QMONO_APP_SWEEP_H
#define QMONO_APP_SWEEP_H

#include <optional>
#include <string>
#include <vector>

#include "qmono/measure_opt.h"

namespace qmono::app {

struct SweepOptions {
    std::vector<double> eps = {0.5, 0.75, 1.0};
    double p_start = 0;
    double p_end = 1;
    double p_step = 0.01;
    unsigned threads = 1;
    OptimizerOptions optimizer;
};

/// One grid point of the psi_tilde(p, eps) family, anchored on A.
struct SweepRow {
    double p = 0;
    double eps = 0;
    double delta_right_A = 0;
    double delta_left_A = 0;
    /// D->(AB) + D->(AC), measured on A.
    double D_pairs = 0;
    double E_BC = 0;
    std::string route;
    double optimizer_spread = 0;
    /// |optimized - closed form| for the right deficit.
    double route_residual = 0;
};

/// Rows ordered by eps (as given), then by p. Throws OutOfRange unless
/// 0 <= p_start < p_end <= 1 and p_step > 0.
std::vector<SweepRow> run_sweep(const SweepOptions &options);

/// Grid values p_start + k * p_step up to p_end (inclusive within 1e-9).
std::vector<double> sweep_grid(const SweepOptions &options);

/// First crossing of delta_right_A from negative to non-negative for the given
/// eps, located by linear interpolation between the bracketing points.
std::optional<double> critical_point(const std::vector<SweepRow> &rows, double eps);

/// Header, one line per row, then "#" summary lines.
std::string sweep_csv(const std::vector<SweepRow> &rows, const SweepOptions &options);

}  // namespace qmono::app

#endif
