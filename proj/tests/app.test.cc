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

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "qmono/app/format.h"
#include "qmono/app/report_json.h"
#include "qmono/app/state_selector.h"
#include "qmono/app/sweep.h"
#include "qmono/app/verify.h"
#include "qmono/entropy.h"
#include "qmono/errors.h"

using namespace qmono;
using namespace qmono::app;

namespace {

ErrorCode error_of(const std::string &text) {
    try {
        parse_state_selector(text);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorCode::OutOfRange;
}

}  // namespace

TEST(app, state_selectors) {
    EXPECT_EQ(parse_state_selector("ghz").dims().size(), 3u);
    EXPECT_EQ(parse_state_selector("ghz", 4).dims().size(), 4u);
    EXPECT_EQ(parse_state_selector("product:n=2").dims().size(), 2u);
    EXPECT_NEAR(subsystem_entropy(parse_state_selector("w"), {"A"}), 0.9182958340544896, 1e-12);
    EXPECT_NEAR(parse_state_selector("psi-tilde:p=0.25,eps=1").matrix()(0, 0).real(), 0.25, 1e-15);
    EXPECT_NEAR(parse_state_selector("ghz-gen:alpha=0.7").matrix()(7, 7).real(), 0.3, 1e-15);
    EXPECT_NEAR(parse_state_selector("w-gen:a=0.5,b=0.25,c=0.25").matrix()(4, 4).real(), 0.5, 1e-15);
    DensityMatrix h1 = parse_state_selector("haar:n=3,seed=9");
    DensityMatrix h2 = parse_state_selector("haar:n=3,seed=9");
    EXPECT_EQ(h1.matrix(), h2.matrix());
}

TEST(app, state_selector_errors) {
    EXPECT_EQ(error_of("bogus"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("psi-tilde:p=0.5"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("psi-tilde:p=abc,eps=1"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("ghz-gen:alpha=0.5,alpha=0.6"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("haar:n=3"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("haar:n=3,seed=-1"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("file:"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("file:/nonexistent/state.json"), ErrorCode::ParseError);
    EXPECT_EQ(error_of("w-gen:a=0.5,b=0.5,c=0.5"), ErrorCode::NotNormalized);
}

TEST(app, number_format) {
    EXPECT_EQ(format_number(1.0 / 3), "0.333333333333");
    EXPECT_EQ(format_number(1), "1");
    EXPECT_EQ(round12(1.0 / 3), 0.333333333333);
}

TEST(app, sweep_grid_and_validation) {
    SweepOptions o;
    std::vector<double> g = sweep_grid(o);
    EXPECT_EQ(g.size(), 101u);
    EXPECT_EQ(g.front(), 0);
    EXPECT_EQ(g.back(), 1);
    o.p_start = 0.5;
    o.p_end = 0.4;
    EXPECT_THROW(sweep_grid(o), Error);
    o.p_end = 0.6;
    o.p_step = 0;
    EXPECT_THROW(sweep_grid(o), Error);
}

TEST(app, sweep_csv_layout) {
    SweepOptions o;
    o.eps = {1.0};
    o.p_start = 0.6;
    o.p_end = 0.7;
    o.p_step = 0.05;
    std::vector<SweepRow> rows = run_sweep(o);
    ASSERT_EQ(rows.size(), 3u);
    std::string csv = sweep_csv(rows, o);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "p,eps,delta_right_A,delta_left_A,D_pairs,E_BC,route,optimizer_spread");
    EXPECT_NE(csv.find("# p_star eps=1 0.6"), std::string::npos);
    EXPECT_NE(csv.find("# max_route_residual"), std::string::npos);
    for (const SweepRow &r : rows) {
        EXPECT_EQ(r.route, "pure_closed_form");
        EXPECT_LE(r.route_residual, 1e-3);
    }
}

TEST(app, critical_point_interpolates) {
    std::vector<SweepRow> rows(4);
    double ps[] = {0.0, 0.1, 0.2, 0.3};
    double vs[] = {0.0, -0.2, 0.2, 0.4};
    for (int i = 0; i < 4; i++) {
        rows[i].p = ps[i];
        rows[i].eps = 1;
        rows[i].delta_right_A = vs[i];
    }
    auto p = critical_point(rows, 1);
    ASSERT_TRUE(p.has_value());
    EXPECT_NEAR(*p, 0.15, 1e-12);
    EXPECT_FALSE(critical_point(rows, 0.5).has_value());
}

TEST(app, sweep_is_independent_of_thread_count) {
    SweepOptions o;
    o.eps = {0.5, 1.0};
    o.p_start = 0.3;
    o.p_end = 0.4;
    o.p_step = 0.02;
    std::string one = sweep_csv(run_sweep(o), o);
    o.threads = 3;
    EXPECT_EQ(sweep_csv(run_sweep(o), o), one);
}

TEST(app, sample_seeds) {
    EXPECT_EQ(sample_seed(7, 0), sample_seed(7, 0));
    EXPECT_NE(sample_seed(7, 0), sample_seed(7, 1));
    EXPECT_NE(sample_seed(7, 0), sample_seed(8, 0));
}

TEST(app, verify_suite_names) {
    EXPECT_EQ(parse_suite("all"), Suite::All);
    EXPECT_EQ(parse_suite("workdeficit"), Suite::WorkDeficit);
    EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(app, verify_on_product_state_passes) {
    VerifyOptions o;
    o.suite = Suite::All;
    o.samples = 1;
    o.state_selector = "product";
    VerifyReport r = run_verify(o);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.identities.size(), 15u);
    for (const auto &id : r.identities) {
        EXPECT_LE(id.max_residual, 1e-9) << id.name;
    }
}

TEST(app, verify_tolerance_override_can_fail) {
    VerifyOptions o;
    o.suite = Suite::Tripartite;
    o.samples = 2;
    o.tolerance_override = 1e-15;
    VerifyReport r = run_verify(o);
    EXPECT_FALSE(r.pass);
    Json j = to_json(r);
    EXPECT_EQ(j["tolerance_override"], 1e-15);
    EXPECT_EQ(j["pass"], false);
}

TEST(app, verify_threads_do_not_change_output) {
    VerifyOptions o;
    o.suite = Suite::Tripartite;
    o.samples = 4;
    std::string one = dump(to_json(run_verify(o)));
    o.threads = 2;
    EXPECT_EQ(dump(to_json(run_verify(o))), one);
}

TEST(app, verify_rejects_zero_samples) {
    VerifyOptions o;
    o.samples = 0;
    EXPECT_THROW(run_verify(o), Error);
}

TEST(app, report_json_keys) {
    Json j = to_json(deficit_report(parse_state_selector("ghz"), "A"));
    EXPECT_EQ(j["route"], "pure_closed_form");
    EXPECT_EQ(j["classification"], "GHZ_class");
    EXPECT_TRUE(j["identity_residuals"].contains("left_from_right"));
    Json c = to_json(classify_ghz_w(parse_state_selector("w")));
    EXPECT_EQ(c["classification"], "W_class");
}
