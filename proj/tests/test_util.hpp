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

#ifndef NLSGATE_TESTS_TEST_UTIL_HPP
#define NLSGATE_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "nlsgate/fock.hpp"
#include "nlsgate/mode_unitary.hpp"

namespace nlsgate::testing {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 engine(0x5eed'1234'abcdULL);
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex random_complex() {
    std::normal_distribution<double> normal;
    return {normal(rng()), normal(rng())};
}

inline Matrix random_matrix(int n) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m(r, c) = random_complex();
    }
    return m;
}

/// Haar-ish unitary from the QR decomposition of a Gaussian matrix.
inline ModeUnitary random_unitary(int n) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(n));
    Matrix q = qr.householderQ();
    return ModeUnitary(q);
}

inline LogicalAmplitudes random_logical() {
    LogicalAmplitudes a{random_complex(), random_complex(), random_complex()};
    const double n = std::sqrt(a.norm_squared());
    return {a.alpha / n, a.beta / n, a.gamma / n};
}

/// Permanent by summing over all n! permutations.
inline Complex naive_permanent(const Matrix &m) {
    const auto n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline double factorial_d(int n) { return std::tgamma(n + 1.0); }

/// Applies U by literally expanding prod_i (sum_j U(j,i) a_j^dag)^{n_i} as a
/// polynomial in creation operators, then reading off Fock amplitudes.
/// Independent of the permanent formula.
inline StateVector expand_creation_operators(const ModeUnitary &u, const StateVector &s) {
    const FockBasis &basis = s.basis();
    const int dim = u.dim();
    std::map<std::vector<int>, Complex> poly_total;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (s[k] == Complex{}) continue;
        const auto &in = basis.state(k);
        double norm = 1.0;
        for (int c : in.counts()) norm *= factorial_d(c);
        std::map<std::vector<int>, Complex> poly{{std::vector<int>(static_cast<std::size_t>(dim), 0), s[k] / std::sqrt(norm)}};
        for (int mode = 0; mode < dim; ++mode) {
            for (int rep = 0; rep < in[static_cast<std::size_t>(mode)]; ++rep) {
                std::map<std::vector<int>, Complex> next;
                for (const auto &[mono, coef] : poly) {
                    for (int j = 0; j < dim; ++j) {
                        const Complex f = u(j, mode);
                        if (f == Complex{}) continue;
                        auto m2 = mono;
                        ++m2[static_cast<std::size_t>(j)];
                        next[m2] += coef * f;
                    }
                }
                poly = std::move(next);
            }
        }
        for (const auto &[mono, coef] : poly) poly_total[mono] += coef;
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (const auto &[mono, coef] : poly_total) {
        double norm = 1.0;
        for (int c : mono) norm *= factorial_d(c);
        out[static_cast<Eigen::Index>(basis.index_of(OccupationVector(mono)))] = coef * std::sqrt(norm);
    }
    return StateVector(s.basis_ptr(), out);
}

inline double max_abs_diff(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace nlsgate::testing

#endif
