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

#ifndef NLSGATE_HERALDING_HPP
#define NLSGATE_HERALDING_HPP

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "nlsgate/fock.hpp"

namespace nlsgate {

/// Mode is not measured; it stays in the conditional state.
struct Any {
    friend bool operator==(Any, Any) { return true; }
};
/// Number-resolving detector firing with exactly k photons.
struct Exactly {
    int k = 0;
    friend bool operator==(Exactly, Exactly) = default;
};
/// Threshold-style detector: k or more photons.
struct AtLeast {
    int k = 1;
    friend bool operator==(AtLeast, AtLeast) = default;
};

using DetectorConstraint = std::variant<Any, Exactly, AtLeast>;

std::string to_string(const DetectorConstraint &c);

/// Per-mode detection constraints. Modes without a constraint are Any and are
/// kept; every other mode is consumed by a detector.
class HeraldPattern {
   public:
    explicit HeraldPattern(int num_modes);

    HeraldPattern &require(PolarizedMode mode, DetectorConstraint constraint);

    int num_modes() const { return static_cast<int>(constraints_.size()); }
    const DetectorConstraint &constraint(std::size_t mode) const { return constraints_.at(mode); }
    bool is_measured(std::size_t mode) const { return !std::holds_alternative<Any>(constraints_.at(mode)); }

    const std::vector<std::size_t> &kept_modes() const { return kept_; }
    const std::vector<std::size_t> &measured_modes() const { return measured_; }

    /// True when every measured mode is Exactly(k); then one herald outcome
    /// is possible and the conditional state is pure.
    bool exactly_only() const;

    /// Whether the measured-mode counts of `occ` satisfy every constraint.
    bool accepts(const OccupationVector &occ) const;

   private:
    void rebuild_partition();

    std::vector<DetectorConstraint> constraints_;
    std::vector<std::size_t> kept_;
    std::vector<std::size_t> measured_;
};

/// Post-measurement state for one detector record.
struct HeraldBranch {
    OccupationVector outcome;  // counts on the measured modes, in measured_modes() order
    StateVector state;         // unnormalized, over the kept modes
    double probability = 0.0;
};

/// Unnormalized conditional state. Distinct herald outcomes are
/// distinguishable records, so branches add as probabilities, never as
/// amplitudes.
struct ConditionalState {
    std::vector<HeraldBranch> branches;
    double probability = 0.0;

    /// More than one herald outcome is possible (AtLeast constraints).
    bool is_mixture() const { return branches.size() > 1; }

    /// The single pure branch. Throws std::logic_error for a mixture or when
    /// no outcome is possible.
    const StateVector &state() const;
};

/// Projects `s` onto the detector outcomes allowed by `pattern`.
///
/// Throws std::invalid_argument when the pattern's mode count differs from
/// the state's.
ConditionalState condition(const StateVector &s, const HeraldPattern &pattern, BasisLimits limits = {});

/// Per-sector conditioning of a multi-sector state.
std::vector<ConditionalState> condition(std::span<const Sector> sectors, const HeraldPattern &pattern,
                                        BasisLimits limits = {});

}  // namespace nlsgate

#endif
