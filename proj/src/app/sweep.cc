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

#include "qmono/app/sweep.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qmono/app/format.h"
#include "qmono/app/parallel.h"
#include "qmono/errors.h"
#include "qmono/monogamy.h"
#include "qmono/states.h"

namespace qmono::app {

std::vector<double> sweep_grid(const SweepOptions &o) {
    if (!(o.p_start >= 0 && o.p_start < o.p_end && o.p_end <= 1 && o.p_step > 0)) {
        throw Error(ErrorCode::OutOfRange, "sweep range needs 0 <= start < end <= 1 and step > 0");
    }
    std::vector<double> grid;
    const auto count = static_cast<size_t>(std::floor((o.p_end - o.p_start) / o.p_step + 1e-9));
    for (size_t k = 0; k <= count; k++) {
        grid.push_back(std::min(o.p_start + static_cast<double>(k) * o.p_step, o.p_end));
    }
    return grid;
}

std::vector<SweepRow> run_sweep(const SweepOptions &options) {
    std::vector<double> grid = sweep_grid(options);
    for (double e : options.eps) {
        if (!(e >= 0 && e <= 1)) {
            throw Error(ErrorCode::OutOfRange, "eps must lie in [0, 1]");
        }
    }
    std::vector<SweepRow> rows(grid.size() * options.eps.size());
    parallel_for(rows.size(), options.threads, [&](size_t i) {
        SweepRow &row = rows[i];
        row.eps = options.eps[i / grid.size()];
        row.p = grid[i % grid.size()];
        TripartiteAnalysis t = analyze_tripartite(psi_tilde(row.p, row.eps).density(), options.optimizer);
        row.delta_right_A = t.delta_right_closed(0);
        row.delta_left_A = t.delta_left_closed(0);
        row.D_pairs = t.pair[0][1].discord + t.pair[0][2].discord;
        row.E_BC = t.eof[1][2];
        row.route = route_name(DeficitRoute::PureClosedForm);
        row.optimizer_spread = t.max_spread();
        row.route_residual = std::abs(t.delta_right(0) - row.delta_right_A);
    });
    return rows;
}

std::optional<double> critical_point(const std::vector<SweepRow> &rows, double eps) {
    const SweepRow *prev = nullptr;
    for (const SweepRow &row : rows) {
        if (row.eps != eps) {
            continue;
        }
        if (prev && prev->delta_right_A < 0 && row.delta_right_A >= 0) {
            double f = -prev->delta_right_A / (row.delta_right_A - prev->delta_right_A);
            return prev->p + f * (row.p - prev->p);
        }
        prev = &row;
    }
    return std::nullopt;
}

std::string sweep_csv(const std::vector<SweepRow> &rows, const SweepOptions &options) {
    std::ostringstream out;
    out << "p,eps,delta_right_A,delta_left_A,D_pairs,E_BC,route,optimizer_spread\n";
    double max_route = 0;
    for (const SweepRow &r : rows) {
        out << format_number(r.p) << ',' << format_number(r.eps) << ',' << format_number(r.delta_right_A) << ','
            << format_number(r.delta_left_A) << ',' << format_number(r.D_pairs) << ',' << format_number(r.E_BC)
            << ',' << r.route << ',' << format_number(r.optimizer_spread) << '\n';
        max_route = std::max(max_route, r.route_residual);
    }
    for (double e : options.eps) {
        out << "# p_star eps=" << format_number(e) << ' ';
        if (auto p = critical_point(rows, e)) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3f", *p);
            out << buf << '\n';
        } else {
            out << "none\n";
        }
    }
    out << "# max_route_residual " << format_number(max_route) << '\n';
    return out.str();
}

}  // namespace qmono::app
