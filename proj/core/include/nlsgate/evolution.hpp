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

#ifndef NLSGATE_EVOLUTION_HPP
#define NLSGATE_EVOLUTION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nlsgate/fock.hpp"
#include "nlsgate/mode_unitary.hpp"

namespace nlsgate {

inline constexpr int kMaxPermanentSize = 12;

/// Exact n! for n <= 20, from a precomputed table.
std::uint64_t factorial(int n);

/// Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
/// subset updates, O(n 2^n). The 0x0 permanent is 1.
///
/// Throws std::invalid_argument for non-square input and std::length_error
/// above kMaxPermanentSize.
Complex permanent(const Matrix &m);

struct TransitionQuery {
    const ModeUnitary &unitary;
    const OccupationVector &out;
    const OccupationVector &in;
};

/// <out| U |in> = per(U_sub) / sqrt(prod in_i! prod out_j!), where U_sub
/// repeats column i of U in_i times and row j out_j times.
///
/// Throws std::invalid_argument when photon numbers or mode counts disagree.
Complex transition_amplitude(const TransitionQuery &q);

/// Dense matrix of U restricted to one sector: L(out, in) = <out|U|in>.
Matrix lift(const ModeUnitary &unitary, const FockBasis &basis);

/// Applies U to a single-sector state; only nonzero input amplitudes are
/// expanded.
StateVector apply(const ModeUnitary &unitary, const StateVector &state);

std::vector<Sector> apply(const ModeUnitary &unitary, std::span<const Sector> sectors);

}  // namespace nlsgate

#endif
