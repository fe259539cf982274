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

#include "nlsgate/heralding.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace nlsgate {

std::string to_string(const DetectorConstraint &c) {
    if (const auto *e = std::get_if<Exactly>(&c)) return "exactly(" + std::to_string(e->k) + ")";
    if (const auto *a = std::get_if<AtLeast>(&c)) return "atleast(" + std::to_string(a->k) + ")";
    return "any";
}

HeraldPattern::HeraldPattern(int num_modes) {
    if (num_modes < 0) throw std::invalid_argument("negative mode count");
    constraints_.assign(static_cast<std::size_t>(num_modes), Any{});
    rebuild_partition();
}

HeraldPattern &HeraldPattern::require(PolarizedMode mode, DetectorConstraint constraint) {
    if (mode.port < 0 || mode.index() >= constraints_.size()) {
        throw std::out_of_range("herald mode " + to_string(mode) + " is outside the circuit");
    }
    const int k = std::visit(
        [](const auto &c) -> int {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, Any>) {
                return 0;
            } else {
                return c.k;
            }
        },
        constraint);
    if (k < 0) throw std::invalid_argument("detector photon count must be non-negative");
    constraints_[mode.index()] = constraint;
    rebuild_partition();
    return *this;
}

void HeraldPattern::rebuild_partition() {
    kept_.clear();
    measured_.clear();
    for (std::size_t m = 0; m < constraints_.size(); ++m) {
        (is_measured(m) ? measured_ : kept_).push_back(m);
    }
}

bool HeraldPattern::exactly_only() const {
    for (std::size_t m : measured_) {
        if (!std::holds_alternative<Exactly>(constraints_[m])) return false;
    }
    return true;
}

bool HeraldPattern::accepts(const OccupationVector &occ) const {
    for (std::size_t m : measured_) {
        const int n = occ[m];
        if (const auto *e = std::get_if<Exactly>(&constraints_[m])) {
            if (n != e->k) return false;
        } else if (const auto *a = std::get_if<AtLeast>(&constraints_[m])) {
            if (n < a->k) return false;
        }
    }
    return true;
}

const StateVector &ConditionalState::state() const {
    if (branches.size() != 1) {
        throw std::logic_error(branches.empty() ? "no herald outcome is possible"
                                                : "conditional state is a mixture of herald outcomes");
    }
    return branches.front().state;
}

ConditionalState condition(const StateVector &s, const HeraldPattern &pattern, BasisLimits limits) {
    const FockBasis &basis = s.basis();
    if (pattern.num_modes() != basis.num_modes()) {
        throw std::invalid_argument("herald pattern covers " + std::to_string(pattern.num_modes()) +
                                    " modes but the state has " + std::to_string(basis.num_modes()));
    }
    const auto &kept = pattern.kept_modes();
    const auto &measured = pattern.measured_modes();
    const int kept_modes = static_cast<int>(kept.size());
    limits.max_photons = std::max(limits.max_photons, basis.total_photons());

    struct Accumulator {
        BasisPtr basis;
        Eigen::VectorXcd amplitudes;
    };
    // Outcomes in descending order, matching the basis convention.
    std::map<OccupationVector, Accumulator, std::greater<>> branches;

    auto branch_for = [&](const OccupationVector &outcome) -> Accumulator & {
        auto it = branches.find(outcome);
        if (it == branches.end()) {
            auto kept_basis = enumerate_basis(kept_modes, basis.total_photons() - outcome.total(), limits);
            auto zeros = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(kept_basis->size()));
            it = branches.emplace(outcome, Accumulator{std::move(kept_basis), zeros}).first;
        }
        return it->second;
    };

    if (pattern.exactly_only()) {
        std::vector<int> counts;
        for (std::size_t m : measured) counts.push_back(std::get<Exactly>(pattern.constraint(m)).k);
        OccupationVector outcome(std::move(counts));
        const int remaining = basis.total_photons() - outcome.total();
        if (remaining >= 0 && (kept_modes > 0 || remaining == 0)) branch_for(outcome);
    }

    std::vector<int> kept_counts(kept.size()), measured_counts(measured.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto &occ = basis.state(k);
        if (!pattern.accepts(occ)) continue;
        for (std::size_t i = 0; i < measured.size(); ++i) measured_counts[i] = occ[measured[i]];
        for (std::size_t i = 0; i < kept.size(); ++i) kept_counts[i] = occ[kept[i]];
        Accumulator &acc = branch_for(OccupationVector(measured_counts));
        const std::size_t target = acc.basis->index_of(OccupationVector(kept_counts));
        acc.amplitudes[static_cast<Eigen::Index>(target)] = s[k];
    }

    ConditionalState out;
    for (auto &[outcome, acc] : branches) {
        StateVector state(std::move(acc.basis), std::move(acc.amplitudes));
        const double p = state.norm_squared();
        out.probability += p;
        out.branches.push_back(HeraldBranch{outcome, std::move(state), p});
    }
    return out;
}

std::vector<ConditionalState> condition(std::span<const Sector> sectors, const HeraldPattern &pattern,
                                        BasisLimits limits) {
    std::vector<ConditionalState> out;
    out.reserve(sectors.size());
    for (const auto &s : sectors) out.push_back(condition(s.state, pattern, limits));
    return out;
}

}  // namespace nlsgate
