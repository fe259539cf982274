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

#include "nlsgate/evolution.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace nlsgate {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
    std::array<std::uint64_t, 21> table{};
    table[0] = 1;
    for (std::size_t i = 1; i < table.size(); ++i) table[i] = table[i - 1] * i;
    return table;
}();

// sqrt(prod n_i!) with the product formed exactly in integers first.
double sqrt_factorial_product(std::span<const int> counts) {
    std::uint64_t product = 1;
    for (int c : counts) product *= factorial(c);
    return std::sqrt(static_cast<double>(product));
}

}  // namespace

std::uint64_t factorial(int n) {
    if (n < 0 || n >= static_cast<int>(kFactorials.size())) {
        throw std::out_of_range("factorial argument out of the exact table range");
    }
    return kFactorials[static_cast<std::size_t>(n)];
}

Complex permanent(const Matrix &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("permanent of a non-square matrix");
    const auto n = static_cast<int>(m.rows());
    if (n > kMaxPermanentSize) {
        throw std::length_error("permanent size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxPermanentSize));
    }
    if (n == 0) return 1.0;
    if (n == 1) return m(0, 0);

    // Gray-code walk over column subsets; row_sums holds sum_{j in S} m(i, j).
    std::vector<Complex> row_sums(static_cast<std::size_t>(n), 0.0);
    Complex total = 0.0;
    std::uint32_t gray = 0;
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t k = 1; k < subsets; ++k) {
        const std::uint32_t next = k ^ (k >> 1);
        const std::uint32_t flipped = next ^ gray;
        const int col = std::countr_zero(flipped);
        const double sign_in = (next & flipped) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += sign_in * m(i, col);
        gray = next;

        Complex prod = 1.0;
        for (const Complex &s : row_sums) prod *= s;
        // (-1)^(n - |S|)
        total += ((n - std::popcount(gray)) % 2 == 0) ? prod : -prod;
    }
    return total;
}

Complex transition_amplitude(const TransitionQuery &q) {
    const int dim = q.unitary.dim();
    if (q.in.num_modes() != static_cast<std::size_t>(dim) || q.out.num_modes() != static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("occupation vectors do not match the unitary's mode count");
    }
    if (q.in.total() != q.out.total()) {
        throw std::invalid_argument("transition between different photon-number sectors");
    }
    const int n = q.in.total();
    std::vector<int> rows, cols;
    rows.reserve(static_cast<std::size_t>(n));
    cols.reserve(static_cast<std::size_t>(n));
    for (int mode = 0; mode < dim; ++mode) {
        for (int k = 0; k < q.out[static_cast<std::size_t>(mode)]; ++k) rows.push_back(mode);
        for (int k = 0; k < q.in[static_cast<std::size_t>(mode)]; ++k) cols.push_back(mode);
    }
    Matrix sub(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) sub(r, c) = q.unitary(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
    }
    return permanent(sub) / (sqrt_factorial_product(q.in.counts()) * sqrt_factorial_product(q.out.counts()));
}

Matrix lift(const ModeUnitary &unitary, const FockBasis &basis) {
    if (basis.num_modes() != unitary.dim()) {
        throw std::invalid_argument("basis and unitary have different mode counts");
    }
    const auto size = static_cast<Eigen::Index>(basis.size());
    Matrix out(size, size);
    for (Eigen::Index c = 0; c < size; ++c) {
        const auto &in = basis.state(static_cast<std::size_t>(c));
        for (Eigen::Index r = 0; r < size; ++r) {
            out(r, c) = transition_amplitude({unitary, basis.state(static_cast<std::size_t>(r)), in});
        }
    }
    return out;
}

StateVector apply(const ModeUnitary &unitary, const StateVector &state) {
    const FockBasis &basis = state.basis();
    if (basis.num_modes() != unitary.dim()) {
        throw std::invalid_argument("state and unitary have different mode counts");
    }
    Eigen::VectorXcd result = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const Complex amp = state[c];
        if (amp == Complex{}) continue;
        const auto &in = basis.state(c);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            result[static_cast<Eigen::Index>(r)] += transition_amplitude({unitary, basis.state(r), in}) * amp;
        }
    }
    return StateVector(state.basis_ptr(), std::move(result));
}

std::vector<Sector> apply(const ModeUnitary &unitary, std::span<const Sector> sectors) {
    std::vector<Sector> out;
    out.reserve(sectors.size());
    for (const auto &s : sectors) {
        out.push_back(Sector{s.logical_level, s.logical_amplitude, apply(unitary, s.state)});
    }
    return out;
}

}  // namespace nlsgate
