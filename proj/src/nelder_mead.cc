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

#include "qmono/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmono {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> start, std::span<const double> steps,
                             const NelderMeadOptions &options) {
    const size_t n = start.size();
    std::vector<std::vector<double>> vertex(n + 1, start);
    for (size_t i = 0; i < n; i++) {
        vertex[i + 1][i] += steps[i];
    }
    int evaluations = 0;
    auto eval = [&](const std::vector<double> &x) {
        evaluations++;
        return f(x);
    };
    std::vector<double> value(n + 1);
    for (size_t i = 0; i <= n; i++) {
        value[i] = eval(vertex[i]);
    }

    std::vector<size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    auto point_along = [&](double t, std::vector<double> &out, const std::vector<double> &worst) {
        for (size_t i = 0; i < n; i++) {
            out[i] = centroid[i] + t * (worst[i] - centroid[i]);
        }
    };

    bool converged = false;
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return value[a] < value[b];
        });
        const size_t best = order.front();
        const size_t worst = order.back();
        const size_t second_worst = order[n - 1];

        double diameter = 0;
        for (size_t k = 0; k <= n; k++) {
            double d2 = 0;
            for (size_t i = 0; i < n; i++) {
                double d = vertex[k][i] - vertex[best][i];
                d2 += d * d;
            }
            diameter = std::max(diameter, std::sqrt(d2));
        }
        if (diameter < options.diameter_tol) {
            converged = true;
            break;
        }
        if (evaluations >= options.max_evaluations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t k = 0; k <= n; k++) {
            if (k == worst) {
                continue;
            }
            for (size_t i = 0; i < n; i++) {
                centroid[i] += vertex[k][i];
            }
        }
        for (auto &c : centroid) {
            c /= static_cast<double>(n);
        }

        point_along(-1.0, trial, vertex[worst]);
        double f_reflect = eval(trial);
        if (f_reflect < value[best]) {
            point_along(-2.0, trial2, vertex[worst]);
            double f_expand = eval(trial2);
            if (f_expand < f_reflect) {
                vertex[worst] = trial2;
                value[worst] = f_expand;
            } else {
                vertex[worst] = trial;
                value[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < value[second_worst]) {
            vertex[worst] = trial;
            value[worst] = f_reflect;
            continue;
        }
        // Contract: outside if the reflection improved on the worst vertex.
        bool outside = f_reflect < value[worst];
        point_along(outside ? -0.5 : 0.5, trial2, vertex[worst]);
        double f_contract = eval(trial2);
        if (f_contract < (outside ? f_reflect : value[worst])) {
            vertex[worst] = trial2;
            value[worst] = f_contract;
            continue;
        }
        for (size_t k = 0; k <= n; k++) {
            if (k == best) {
                continue;
            }
            for (size_t i = 0; i < n; i++) {
                vertex[k][i] = vertex[best][i] + 0.5 * (vertex[k][i] - vertex[best][i]);
            }
            value[k] = eval(vertex[k]);
        }
    }

    size_t best = static_cast<size_t>(std::min_element(value.begin(), value.end()) - value.begin());
    return NelderMeadResult{vertex[best], value[best], evaluations, converged};
}

}  // namespace qmono
