// Copyright 2026 The nlsgate Authors
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

#include "nlsgate/param_search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace nlsgate;
namespace nt = nlsgate::testing;

namespace {

constexpr double kPi = std::numbers::pi;

Candidate at_degrees(double sigma, double theta) { return evaluate({sigma * kDegree, theta * kDegree}); }

}  // namespace

TEST(Sweep, best_grid_point_lies_within_two_cells_of_the_optimum) {
    const OptimalPoint opt = optimal_params();
    const auto candidates = sweep(SearchConfig{});
    ASSERT_FALSE(candidates.empty());
    const Candidate &best = candidates.front();
    EXPECT_LE(std::abs(best.params.sigma - opt.sigma_star), 2.0 * kDegree);
    EXPECT_LE(std::abs(best.params.theta - opt.theta_star), 2.0 * kDegree);
}

TEST(Sweep, low_theta_strip_has_no_sign_gate) {
    SearchConfig cfg;
    cfg.theta = {0.0, 10 * kDegree};
    // Brute-force scan of the strip is its own oracle.
    double floor = INFINITY;
    for (double s = 0; s <= 180.0; s += 0.1) {
        for (double t = 0; t <= 10.0; t += 0.1) floor = std::min(floor, at_degrees(s, t).residual);
    }
    EXPECT_GT(floor, 1e-3);
    const auto candidates = sweep(cfg);
    ASSERT_FALSE(candidates.empty());
    for (const auto &c : candidates) EXPECT_GT(c.residual, 1e-3);
}

TEST(Sweep, single_point_grid) {
    SearchConfig cfg;
    cfg.sigma = {0, 0};
    cfg.theta = {0, 0};
    const auto candidates = sweep(cfg);
    ASSERT_EQ(candidates.size(), 1u);
    EXPECT_EQ(candidates[0].residual, 4.0);
    EXPECT_EQ(candidates[0].success, 1.0);
}

TEST(Sweep, rejects_invalid_configs) {
    SearchConfig empty;
    empty.sigma = {1.0, 0.5};
    EXPECT_THROW(sweep(empty), std::invalid_argument);
    SearchConfig step;
    step.grid_step = 0.0;
    EXPECT_THROW(sweep(step), std::invalid_argument);
    SearchConfig tol;
    tol.refine_tolerance = -1;
    EXPECT_THROW(refine(at_degrees(1, 1), tol), std::invalid_argument);
}

TEST(Sweep, is_reproducible) {
    SearchConfig cfg;
    cfg.grid_step = 0.5 * kDegree;
    const auto a = sweep(cfg), b = sweep(cfg);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(a[i].params, b[i].params);
        ASSERT_EQ(a[i].residual, b[i].residual);
        ASSERT_EQ(a[i].success, b[i].success);
    }
}

TEST(Refine, converges_from_the_neighbouring_grid_point) {
    const OptimalPoint opt = optimal_params();
    const Candidate r = refine(at_degrees(150, 61), SearchConfig{});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.params.sigma, opt.sigma_star, 1e-6);
    EXPECT_NEAR(r.params.theta, opt.theta_star, 1e-6);
    EXPECT_NEAR(r.success, opt.success, 1e-9);
}

TEST(Refine, from_origin_reaches_some_zero_without_beating_a_squared) {
    const SearchConfig cfg;
    const Candidate r = refine(at_degrees(0, 0), cfg);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.residual, cfg.refine_tolerance);
    EXPECT_LE(r.success, optimal_params().success + 1e-9);
}

TEST(Refine, optimum_is_a_fixed_point) {
    const OptimalPoint opt = optimal_params();
    const Candidate r = refine(evaluate(opt.params()), SearchConfig{});
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.params.sigma, opt.sigma_star, 1e-9);
    EXPECT_NEAR(r.params.theta, opt.theta_star, 1e-9);
}

TEST(Refine, reports_best_so_far_when_unconverged) {
    SearchConfig cfg;
    cfg.theta = {0.0, 10 * kDegree};
    const Candidate start = at_degrees(90, 5);
    const Candidate r = refine(start, cfg);
    EXPECT_FALSE(r.converged);
    EXPECT_LE(r.residual, start.residual);
    EXPECT_TRUE(cfg.theta.contains(r.params.theta));

    SearchConfig tight;
    tight.max_iterations = 3;
    const Candidate short_run = refine(at_degrees(100, 30), tight);
    EXPECT_FALSE(short_run.converged);
    EXPECT_LE(short_run.iterations, 4);
}

TEST(Canonicalize, examples) {
    const NlsParams opt = optimal_params().params();
    EXPECT_EQ(canonicalize({opt.sigma, -opt.theta}), opt);
    const NlsParams wrapped = canonicalize({opt.sigma + 2 * kPi, opt.theta});
    EXPECT_NEAR(wrapped.sigma, opt.sigma, 1e-14);
    EXPECT_EQ(wrapped.theta, opt.theta);
    EXPECT_EQ(canonicalize(opt), opt);
}

TEST(Canonicalize, preserves_the_coefficients) {
    for (int trial = 0; trial < 1000; ++trial) {
        const NlsParams p{nt::uniform(-20, 20), nt::uniform(-20, 20)};
        const NlsParams c = canonicalize(p);
        ASSERT_GE(c.sigma, 0.0);
        ASSERT_LE(c.sigma, kPi);
        ASSERT_GE(c.theta, 0.0);
        ASSERT_LE(c.theta, kPi);
        ASSERT_LE(closed_form_coefficients(p).max_deviation(closed_form_coefficients(c)), 1e-12);
        ASSERT_EQ(canonicalize(c), c);
    }
}

TEST(Optimize, default_config_recovers_the_closed_form) {
    const OptimalPoint opt = optimal_params();
    const SearchResult r = optimize(SearchConfig{});
    ASSERT_TRUE(r.converged);
    EXPECT_NEAR(r.best.params.sigma, opt.sigma_star, 1e-4);
    EXPECT_NEAR(r.best.params.theta, opt.theta_star, 1e-4);
    EXPECT_NEAR(r.best.success, opt.success, 1e-8);
    EXPECT_EQ(r.grid_points, 181u * 91u);
}

TEST(Optimize, coarse_grid_still_converges) {
    const OptimalPoint opt = optimal_params();
    SearchConfig cfg;
    cfg.grid_step = 30 * kDegree;
    const SearchResult r = optimize(cfg);
    ASSERT_TRUE(r.converged);
    EXPECT_NEAR(r.best.params.sigma, opt.sigma_star, 1e-4);
    EXPECT_NEAR(r.best.params.theta, opt.theta_star, 1e-4);
}

TEST(Optimize, strip_without_solutions_is_unconverged) {
    SearchConfig cfg;
    cfg.theta = {0.0, 10 * kDegree};
    const SearchResult r = optimize(cfg);
    EXPECT_FALSE(r.converged);
    EXPECT_GT(r.best.residual, 1e-3);
}

TEST(Optimize, is_bit_reproducible) {
    const SearchResult a = optimize(SearchConfig{}), b = optimize(SearchConfig{});
    ASSERT_EQ(a.refined.size(), b.refined.size());
    for (std::size_t i = 0; i < a.refined.size(); ++i) {
        ASSERT_EQ(a.refined[i].params, b.refined[i].params);
        ASSERT_EQ(a.refined[i].residual, b.refined[i].residual);
        ASSERT_EQ(a.refined[i].iterations, b.refined[i].iterations);
    }
}

TEST(Certify, no_zero_residual_point_beats_a_squared) {
    SearchConfig cfg;
    cfg.grid_step = 0.25 * kDegree;
    const double bound = optimal_params().success + 1e-9;
    const Certificate cert = certify(cfg, bound);
    EXPECT_TRUE(cert.holds);
    EXPECT_GE(cert.zero_residual_points, 1u);
    EXPECT_NEAR(cert.max_success, optimal_params().success, 1e-9);
    EXPECT_LT(cert.max_success, kKlmSuccessProbability);
}

TEST(Certify, holds_on_the_full_theta_half_turn) {
    // theta in (pi/2, pi] only adds the global-sign mirror of the optimum.
    SearchConfig cfg;
    cfg.grid_step = 0.5 * kDegree;
    cfg.theta = {0.0, kPi};
    const Certificate cert = certify(cfg, optimal_params().success + 1e-9);
    EXPECT_TRUE(cert.holds);
    EXPECT_NEAR(cert.max_success, optimal_params().success, 1e-9);
}
