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

#include "qmono/app/report_json.h"

#include "qmono/app/format.h"

namespace qmono::app {

namespace {

Json num(double v) {
    return round12(v);
}

Json opt(const std::optional<double> &v) {
    return v ? num(*v) : Json(nullptr);
}

Json pair_json(const PairCorrelations &p) {
    Json j;
    j["first"] = p.first;
    j["second"] = p.second;
    j["entropy_first"] = num(p.entropy_first);
    j["entropy_second"] = num(p.entropy_second);
    j["mutual_information"] = num(p.mutual);
    j["classical_right"] = opt(p.classical_right);
    j["classical_left"] = opt(p.classical_left);
    j["discord_right"] = opt(p.discord_right);
    j["discord_left"] = opt(p.discord_left);
    j["eof"] = opt(p.eof);
    j["work_deficit_right"] = opt(p.work_deficit_right);
    j["work_deficit_left"] = opt(p.work_deficit_left);
    Json diags = Json::array();
    for (const auto &d : p.diagnostics) {
        diags.push_back(to_json(d));
    }
    j["diagnostics"] = diags;
    return j;
}

}  // namespace

Json to_json(const OptimizerDiagnostics &d) {
    Json j;
    j["measurement_family"] = d.measurement_family;
    j["restarts"] = d.restarts;
    j["evaluations"] = d.evaluations;
    j["spread"] = num(d.spread);
    j["best_start"] = d.best_start;
    return j;
}

Json to_json(const CorrelationReport &r) {
    Json j;
    j["dims"] = r.dims.dims();
    j["labels"] = r.dims.labels();
    j["pure"] = r.pure;
    Json ent = Json::array();
    for (const auto &[parties, s] : r.entropies) {
        ent.push_back(Json{{"parties", parties}, {"entropy", num(s)}});
    }
    j["entropies"] = ent;
    Json pairs = Json::array();
    for (const auto &p : r.pairs) {
        pairs.push_back(pair_json(p));
    }
    j["pairs"] = pairs;
    Json bip = Json::array();
    for (const auto &p : r.bipartitions) {
        bip.push_back(pair_json(p));
    }
    j["bipartitions"] = bip;
    return j;
}

Json to_json(const DeficitReport &r) {
    Json j;
    j["anchor"] = r.anchor;
    j["delta_left"] = opt(r.delta_left);
    j["delta_right"] = num(r.delta_right);
    j["route"] = route_name(r.route);
    j["left_heuristic"] = r.left_heuristic;
    Json res = Json::object();
    for (const auto &[name, v] : r.identity_residuals) {
        res[name] = num(v);
    }
    j["identity_residuals"] = res;
    j["classification"] = classification_name(r.classification);
    j["classification_boundary"] = r.classification_boundary;
    return j;
}

Json to_json(const ClassificationResult &r) {
    Json j;
    j["classification"] = classification_name(r.verdict);
    j["delta_left_C"] = num(r.delta_left_c);
    j["boundary"] = r.boundary;
    return j;
}

Json to_json(const RecursionCheck &r) {
    Json j;
    j["lhs"] = num(r.lhs);
    j["rhs"] = num(r.rhs);
    j["residual"] = num(r.residual);
    j["max_optimizer_spread"] = num(r.max_spread);
    Json diags = Json::array();
    for (const auto &d : r.diagnostics) {
        diags.push_back(to_json(d));
    }
    j["diagnostics"] = diags;
    return j;
}

Json to_json(const VerifyReport &r) {
    Json j;
    j["suite"] = suite_name(r.options.suite);
    j["samples"] = r.options.samples;
    j["seed"] = r.options.seed;
    j["state"] = r.options.state_selector ? Json(*r.options.state_selector) : Json(nullptr);
    j["tolerance_override"] = opt(r.options.tolerance_override);
    Json ids = Json::array();
    for (const auto &id : r.identities) {
        Json e;
        e["name"] = id.name;
        e["max_residual"] = num(id.max_residual);
        e["mean_residual"] = num(id.mean_residual);
        e["tolerance"] = num(id.tolerance);
        e["samples"] = id.samples;
        e["pass"] = id.pass;
        ids.push_back(e);
    }
    j["identities"] = ids;
    j["max_optimizer_spread"] = num(r.max_optimizer_spread);
    j["pass"] = r.pass;
    return j;
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

}  // namespace qmono::app
