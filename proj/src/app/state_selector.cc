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

#include "qmono/app/state_selector.h"

#include <charconv>
#include <cmath>
#include <map>

#include "qmono/errors.h"
#include "qmono/states.h"

namespace qmono::app {

namespace {

using Args = std::map<std::string, std::string>;

Args parse_args(const std::string &text) {
    Args args;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string item = text.substr(pos, end - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorCode::ParseError, "expected key=value, got '" + item + "'");
        }
        if (!args.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
            throw Error(ErrorCode::ParseError, "repeated key '" + item.substr(0, eq) + "'");
        }
        pos = end + 1;
    }
    return args;
}

void require_keys(const Args &args, std::initializer_list<const char *> keys, const std::string &selector) {
    if (args.size() != keys.size()) {
        throw Error(ErrorCode::ParseError, "wrong parameters for '" + selector + "'");
    }
    for (const char *k : keys) {
        if (!args.count(k)) {
            throw Error(ErrorCode::ParseError, "'" + selector + "' needs " + k);
        }
    }
}

double to_double(const std::string &s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
    }
    return v;
}

uint64_t to_uint(const std::string &s) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::ParseError, "not a non-negative integer: '" + s + "'");
    }
    return v;
}

size_t qubit_count(const std::string &params, const std::string &selector, size_t fallback) {
    if (params.empty()) {
        return fallback;
    }
    Args args = parse_args(params);
    require_keys(args, {"n"}, selector);
    uint64_t n = to_uint(args["n"]);
    if (n < 2 || n > 6) {
        throw Error(ErrorCode::ParseError, "n must be between 2 and 6");
    }
    return n;
}

StateVector symmetric_w(size_t n) {
    std::vector<Complex> amps(size_t{1} << n);
    for (size_t k = 0; k < n; k++) {
        amps[size_t{1} << k] = 1 / std::sqrt(static_cast<double>(n));
    }
    return StateVector(DimensionList::qubits(n), std::move(amps));
}

}  // namespace

DensityMatrix parse_state_selector(const std::string &text, size_t default_qubits) {
    size_t colon = text.find(':');
    std::string selector = text.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : text.substr(colon + 1);
    bool has_params = colon != std::string::npos;

    if (selector == "file") {
        if (params.empty()) {
            throw Error(ErrorCode::ParseError, "file: needs a path");
        }
        return load_state(params);
    }
    if (selector == "ghz") {
        return ghz(qubit_count(params, selector, default_qubits)).density();
    }
    if (selector == "w") {
        return symmetric_w(qubit_count(params, selector, default_qubits)).density();
    }
    if (selector == "product") {
        return all_zero(qubit_count(params, selector, default_qubits)).density();
    }
    if (!has_params) {
        throw Error(ErrorCode::ParseError, "unknown state selector '" + text + "'");
    }
    Args args = parse_args(params);
    if (selector == "psi-tilde") {
        require_keys(args, {"p", "eps"}, selector);
        return psi_tilde(to_double(args["p"]), to_double(args["eps"])).density();
    }
    if (selector == "ghz-gen") {
        require_keys(args, {"alpha"}, selector);
        return ghz_generalized(to_double(args["alpha"])).density();
    }
    if (selector == "w-gen") {
        require_keys(args, {"a", "b", "c"}, selector);
        return w_generalized(to_double(args["a"]), to_double(args["b"]), to_double(args["c"])).density();
    }
    if (selector == "haar") {
        require_keys(args, {"n", "seed"}, selector);
        uint64_t n = to_uint(args["n"]);
        if (n < 2 || n > 6) {
            throw Error(ErrorCode::ParseError, "n must be between 2 and 6");
        }
        return haar_random_pure(DimensionList::qubits(n), to_uint(args["seed"])).density();
    }
    throw Error(ErrorCode::ParseError, "unknown state selector '" + selector + "'");
}

}  // namespace qmono::app
