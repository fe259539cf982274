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

#ifndef NLSGATE_PARAM_SEARCH_HPP
#define NLSGATE_PARAM_SEARCH_HPP

#include <cstddef>
#include <numbers>
#include <vector>

#include "nlsgate/nls_gate.hpp"

namespace nlsgate {

inline constexpr double kDegree = std::numbers::pi / 180.0;

struct AngleRange {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return x >= lo && x <= hi; }
    double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

/// Two-stage search for sign-gate angles: a grid sweep over the box followed
/// by simplex refinement of each grid-local minimum, all inside the box.
struct SearchConfig {
    AngleRange sigma{0.0, std::numbers::pi};
    AngleRange theta{0.0, std::numbers::pi / 2};
    double grid_step = 1.0 * kDegree;
    /// A refined point counts as converged once its residual is at or below this.
    double refine_tolerance = 1e-20;
    int max_iterations = 5000;
    /// Weight of success in the sweep objective residual - weight * success.
    double penalty_weight = 1e-3;

    /// Throws std::invalid_argument for an empty range, a non-positive step
    /// or tolerance, or a non-positive iteration budget.
    void validate() const;
};

struct Candidate {
    NlsParams params;
    double residual = 0.0;
    double success = 0.0;  // |c0|^2
    bool converged = false;
    int iterations = 0;

    double objective(double penalty_weight) const { return residual - penalty_weight * success; }
};

Candidate evaluate(NlsParams p);

/// Grid points whose penalized objective is no larger than any of their
/// (up to 8) neighbours; plateaus keep only their lexicographically first
/// point. Sorted by objective, then (sigma, theta).
std::vector<Candidate> sweep(const SearchConfig &cfg);

/// Nelder-Mead minimization of the residual from `start`, then, if the
/// residual reached cfg.refine_tolerance, a success-increasing walk along
/// any flat direction of the zero-residual set. Returns the best point seen,
/// with `converged` false when the tolerance was never reached.
Candidate refine(const Candidate &start, const SearchConfig &cfg);

/// Maps angles onto sigma in [0, pi], theta in [0, pi] using only exact
/// symmetries of the closed-form coefficients: 2 pi periodicity in both
/// angles and evenness in each.
NlsParams canonicalize(NlsParams p);

struct SearchResult {
    Candidate best;
    std::vector<Candidate> refined;  // one per sweep candidate, sweep order
    std::size_t grid_points = 0;
    bool converged = false;
};

/// Sweep, refine every local minimum, then pick the converged candidate with
/// the highest success (ties broken by (sigma, theta)). Falls back to the
/// lowest residual when nothing converged.
SearchResult optimize(const SearchConfig &cfg);

struct Certificate {
    double grid_step = 0.0;
    double residual_threshold = 0.0;
    double success_bound = 0.0;
    std::size_t local_minima = 0;
    std::size_t zero_residual_points = 0;
    double max_success = 0.0;  // over refined points with residual <= threshold
    NlsParams argmax;
    bool holds = false;  // max_success <= success_bound
};

/// Exhaustive check that no refined point with residual <= residual_threshold
/// exceeds success_bound anywhere on cfg's box.
Certificate certify(const SearchConfig &cfg, double success_bound, double residual_threshold = 1e-6);

std::size_t grid_size(const AngleRange &range, double step);

}  // namespace nlsgate

#endif
