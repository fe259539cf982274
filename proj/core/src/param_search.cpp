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

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace nlsgate {

namespace {

bool lex_less(const NlsParams &a, const NlsParams &b) {
    return std::tie(a.sigma, a.theta) < std::tie(b.sigma, b.theta);
}

NlsParams clamp_to(const SearchConfig &cfg, NlsParams p) {
    return {cfg.sigma.clamp(p.sigma), cfg.theta.clamp(p.theta)};
}

double residual_at(NlsParams p) { return nls_residual(closed_form_coefficients(p)); }

// Deviation from the sign-gate condition; the closed-form coefficients are real.
Eigen::Vector2d constraint(NlsParams p) {
    const GateCoefficients c = closed_form_coefficients(p);
    return {(c.c1 - c.c0).real(), (c.c2 + c.c0).real()};
}

Eigen::Matrix2d constraint_jacobian(NlsParams p) {
    constexpr double h = 1e-6;
    Eigen::Matrix2d j;
    j.col(0) = (constraint({p.sigma + h, p.theta}) - constraint({p.sigma - h, p.theta})) / (2 * h);
    j.col(1) = (constraint({p.sigma, p.theta + h}) - constraint({p.sigma, p.theta - h})) / (2 * h);
    return j;
}

struct Vertex {
    NlsParams p;
    double f = 0.0;
};

struct SimplexRun {
    Vertex best;
    int iterations = 0;
};

// Nelder-Mead with reflection 1, expansion 2, contraction 1/2, shrink 1/2.
// Vertices are clamped into the search box.
SimplexRun nelder_mead(NlsParams start, double step, const SearchConfig &cfg, int budget) {
    constexpr double kSizeTolerance = 1e-13;
    auto make = [&](NlsParams p) {
        p = clamp_to(cfg, p);
        return Vertex{p, residual_at(p)};
    };
    auto offset = [&](NlsParams base, double ds, double dt) {
        NlsParams p = clamp_to(cfg, {base.sigma + ds, base.theta + dt});
        if (p == clamp_to(cfg, base)) p = clamp_to(cfg, {base.sigma - ds, base.theta - dt});
        return p;
    };

    std::array<Vertex, 3> v{make(start), make(offset(start, step, 0.0)), make(offset(start, 0.0, step))};
    auto by_value = [](const Vertex &a, const Vertex &b) {
        return a.f < b.f || (a.f == b.f && lex_less(a.p, b.p));
    };

    int it = 0;
    for (; it < budget; ++it) {
        std::sort(v.begin(), v.end(), by_value);
        double size = 0.0;
        for (std::size_t i = 1; i < v.size(); ++i) {
            size = std::max({size, std::abs(v[i].p.sigma - v[0].p.sigma), std::abs(v[i].p.theta - v[0].p.theta)});
        }
        if (size <= kSizeTolerance) break;

        const NlsParams centroid{(v[0].p.sigma + v[1].p.sigma) / 2, (v[0].p.theta + v[1].p.theta) / 2};
        auto along = [&](double t) {
            return make({centroid.sigma + t * (v[2].p.sigma - centroid.sigma),
                         centroid.theta + t * (v[2].p.theta - centroid.theta)});
        };

        const Vertex reflected = along(-1.0);
        if (reflected.f < v[0].f) {
            const Vertex expanded = along(-2.0);
            v[2] = expanded.f < reflected.f ? expanded : reflected;
        } else if (reflected.f < v[1].f) {
            v[2] = reflected;
        } else {
            const bool outside = reflected.f < v[2].f;
            const Vertex contracted = along(outside ? -0.5 : 0.5);
            if (contracted.f < (outside ? reflected.f : v[2].f)) {
                v[2] = contracted;
            } else {
                for (std::size_t i = 1; i < v.size(); ++i) {
                    v[i] = make({(v[0].p.sigma + v[i].p.sigma) / 2, (v[0].p.theta + v[i].p.theta) / 2});
                }
            }
        }
    }
    std::sort(v.begin(), v.end(), by_value);
    return {v[0], it};
}

// Gauss-Newton projection back onto the zero-residual set.
NlsParams project(NlsParams p, const SearchConfig &cfg) {
    for (int i = 0; i < 8; ++i) {
        const Eigen::Vector2d f = constraint(p);
        if (f.squaredNorm() <= cfg.refine_tolerance * 1e-6) break;
        const Eigen::Vector2d dx =
            constraint_jacobian(p).completeOrthogonalDecomposition().solve(f);
        p = clamp_to(cfg, {p.sigma - dx[0], p.theta - dx[1]});
    }
    return p;
}

// Walks along a flat direction of the zero-residual set while success grows.
// Isolated zeros (full-rank constraint Jacobian) are left as they are.
int manifold_walk(Vertex &point, const SearchConfig &cfg, int budget) {
    double step = cfg.grid_step;
    int it = 0;
    for (; it < budget && step > 1e-12; ++it) {
        const Eigen::JacobiSVD<Eigen::Matrix2d> svd(constraint_jacobian(point.p), Eigen::ComputeFullV);
        const Eigen::Vector2d s = svd.singularValues();
        if (s[1] > 1e-8 * std::max(s[0], 1e-300)) break;
        const Eigen::Vector2d tangent = svd.matrixV().col(1);

        constexpr double h = 1e-6;
        const double p0 = point.p.sigma, t0 = point.p.theta;
        const Eigen::Vector2d grad{
            (std::norm(closed_form_coefficients({p0 + h, t0}).c0) - std::norm(closed_form_coefficients({p0 - h, t0}).c0)) /
                (2 * h),
            (std::norm(closed_form_coefficients({p0, t0 + h}).c0) - std::norm(closed_form_coefficients({p0, t0 - h}).c0)) /
                (2 * h)};
        const double slope = grad.dot(tangent);
        if (std::abs(slope) < 1e-14) break;
        const Eigen::Vector2d dir = (slope > 0 ? 1.0 : -1.0) * tangent;

        const NlsParams trial = project(clamp_to(cfg, {p0 + step * dir[0], t0 + step * dir[1]}), cfg);
        const double f = residual_at(trial);
        if (f <= cfg.refine_tolerance && evaluate(trial).success > evaluate(point.p).success) {
            point = {trial, f};
            step *= 2;
        } else {
            step /= 2;
        }
    }
    return it;
}

}  // namespace

void SearchConfig::validate() const {
    if (!(sigma.lo <= sigma.hi) || !(theta.lo <= theta.hi)) {
        throw std::invalid_argument("search range is empty");
    }
    if (!std::isfinite(sigma.lo) || !std::isfinite(sigma.hi) || !std::isfinite(theta.lo) || !std::isfinite(theta.hi)) {
        throw std::invalid_argument("search range must be finite");
    }
    if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(refine_tolerance > 0.0)) throw std::invalid_argument("refine tolerance must be positive");
    if (max_iterations <= 0) throw std::invalid_argument("iteration budget must be positive");
}

std::size_t grid_size(const AngleRange &range, double step) {
    return static_cast<std::size_t>(std::floor((range.hi - range.lo) / step + 1e-9)) + 1;
}

Candidate evaluate(NlsParams p) {
    const GateCoefficients c = closed_form_coefficients(p);
    Candidate out;
    out.params = p;
    out.residual = nls_residual(c);
    out.success = std::norm(c.c0);
    return out;
}

std::vector<Candidate> sweep(const SearchConfig &cfg) {
    cfg.validate();
    const std::size_t ns = grid_size(cfg.sigma, cfg.grid_step);
    const std::size_t nt = grid_size(cfg.theta, cfg.grid_step);

    std::vector<Candidate> grid(ns * nt);
    std::vector<double> objective(ns * nt);
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            const NlsParams p{cfg.sigma.lo + static_cast<double>(i) * cfg.grid_step,
                              cfg.theta.lo + static_cast<double>(j) * cfg.grid_step};
            grid[i * nt + j] = evaluate(p);
            objective[i * nt + j] = grid[i * nt + j].objective(cfg.penalty_weight);
        }
    }

    std::vector<Candidate> minima;
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
            const double f = objective[i * nt + j];
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di) {
                for (int dj = -1; dj <= 1 && is_min; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const auto ni = static_cast<std::ptrdiff_t>(i) + di;
                    const auto nj = static_cast<std::ptrdiff_t>(j) + dj;
                    if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(ns) || nj >= static_cast<std::ptrdiff_t>(nt)) {
                        continue;
                    }
                    const double g = objective[static_cast<std::size_t>(ni) * nt + static_cast<std::size_t>(nj)];
                    // Ties go to the lexicographically earlier grid point.
                    if (g < f || (g == f && std::tie(ni, nj) < std::tie(i, j))) is_min = false;
                }
            }
            if (is_min) minima.push_back(grid[i * nt + j]);
        }
    }

    std::sort(minima.begin(), minima.end(), [&](const Candidate &a, const Candidate &b) {
        const double fa = a.objective(cfg.penalty_weight), fb = b.objective(cfg.penalty_weight);
        if (fa != fb) return fa < fb;
        return lex_less(a.params, b.params);
    });
    return minima;
}

Candidate refine(const Candidate &start, const SearchConfig &cfg) {
    cfg.validate();
    if (!std::isfinite(start.params.sigma) || !std::isfinite(start.params.theta)) {
        throw std::invalid_argument("refinement start must be finite");
    }
    int used = 0;
    SimplexRun run = nelder_mead(start.params, std::max(0.5 * cfg.grid_step, 1e-4), cfg, cfg.max_iterations);
    used += run.iterations;
    Vertex best = run.best;

    // Restart from the best vertex until a fresh simplex stops improving.
    for (int restart = 0; restart < 4 && used < cfg.max_iterations; ++restart) {
        const SimplexRun again = nelder_mead(best.p, 1e-3, cfg, cfg.max_iterations - used);
        used += again.iterations;
        if (!(again.best.f < best.f)) break;
        best = again.best;
    }

    // A residual floor above tolerance is a genuine local minimum (e.g. on
    // the sigma = 0 mirror line). Hop to deterministic low-discrepancy starts
    // across the box until a zero is found or the budget runs out.
    constexpr double kR2a = 0.7548776662466927, kR2b = 0.5698402909980532;
    for (int hop = 1; best.f > cfg.refine_tolerance && used < cfg.max_iterations; ++hop) {
        const double u = std::fmod(0.5 + hop * kR2a, 1.0), w = std::fmod(0.5 + hop * kR2b, 1.0);
        const NlsParams from{cfg.sigma.lo + u * (cfg.sigma.hi - cfg.sigma.lo),
                             cfg.theta.lo + w * (cfg.theta.hi - cfg.theta.lo)};
        SimplexRun hopped = nelder_mead(from, std::max(0.5 * cfg.grid_step, 1e-4), cfg, cfg.max_iterations - used);
        used += hopped.iterations + 1;
        for (int restart = 0; restart < 4 && used < cfg.max_iterations; ++restart) {
            const SimplexRun again = nelder_mead(hopped.best.p, 1e-3, cfg, cfg.max_iterations - used);
            used += again.iterations;
            if (!(again.best.f < hopped.best.f)) break;
            hopped.best = again.best;
        }
        if (hopped.best.f < best.f) best = hopped.best;
    }

    const bool converged = best.f <= cfg.refine_tolerance;
    if (converged && used < cfg.max_iterations) {
        used += manifold_walk(best, cfg, cfg.max_iterations - used);
    }

    Candidate out = evaluate(best.p);
    out.converged = converged;
    out.iterations = used;
    return out;
}

NlsParams canonicalize(NlsParams p) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return {std::abs(std::remainder(p.sigma, two_pi)), std::abs(std::remainder(p.theta, two_pi))};
}

SearchResult optimize(const SearchConfig &cfg) {
    SearchResult result;
    result.grid_points = grid_size(cfg.sigma, cfg.grid_step) * grid_size(cfg.theta, cfg.grid_step);
    const std::vector<Candidate> candidates = sweep(cfg);
    result.refined.reserve(candidates.size());
    for (const auto &c : candidates) result.refined.push_back(refine(c, cfg));

    const Candidate *best = nullptr;
    for (const auto &c : result.refined) {
        if (!c.converged) continue;
        if (best == nullptr || c.success > best->success ||
            (c.success == best->success && lex_less(c.params, best->params))) {
            best = &c;
        }
    }
    result.converged = best != nullptr;
    if (best == nullptr) {
        for (const auto &c : result.refined) {
            if (best == nullptr || c.residual < best->residual ||
                (c.residual == best->residual && lex_less(c.params, best->params))) {
                best = &c;
            }
        }
    }
    if (best != nullptr) result.best = *best;
    return result;
}

Certificate certify(const SearchConfig &cfg, double success_bound, double residual_threshold) {
    Certificate cert;
    cert.grid_step = cfg.grid_step;
    cert.residual_threshold = residual_threshold;
    cert.success_bound = success_bound;
    const std::vector<Candidate> candidates = sweep(cfg);
    cert.local_minima = candidates.size();
    for (const auto &c : candidates) {
        const Candidate r = refine(c, cfg);
        if (r.residual > residual_threshold) continue;
        ++cert.zero_residual_points;
        if (cert.zero_residual_points == 1 || r.success > cert.max_success) {
            cert.max_success = r.success;
            cert.argmax = r.params;
        }
    }
    cert.holds = cert.max_success <= success_bound;
    return cert;
}

}  // namespace nlsgate
