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

#ifndef QMONO_APP_VERIFY_H
#define QMONO_APP_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmono/measure_opt.h"

namespace qmono::app {

enum class Suite { Tripartite, Npartite, WorkDeficit, All };

/// "tripartite", "npartite", "workdeficit" or "all".
std::optional<Suite> parse_suite(const std::string &name);
const char *suite_name(Suite suite);

struct VerifyOptions {
    Suite suite = Suite::All;
    size_t samples = 20;
    uint64_t seed = 7;
    /// Replaces every identity's own tolerance when set.
    std::optional<double> tolerance_override;
    /// Fixed state used instead of random samples (three qubits for the
    /// tripartite and work-deficit suites, four for the N-partite one).
    std::optional<std::string> state_selector;
    unsigned threads = 1;
    OptimizerOptions optimizer;
};

struct IdentityResult {
    std::string name;
    double max_residual = 0;
    double mean_residual = 0;
    double tolerance = 0;
    size_t samples = 0;
    bool pass = true;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<IdentityResult> identities;
    double max_optimizer_spread = 0;
    bool pass = true;
};

/// Seed of sample `index` derived from the suite seed with one splitmix64 step.
uint64_t sample_seed(uint64_t seed, uint64_t index);

/// Residuals are non-negative; one-sided bounds report their violation.
VerifyReport run_verify(const VerifyOptions &options);

}  // namespace qmono::app

#endif
