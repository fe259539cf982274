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

#include "nlsgate/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nlsgate {

char to_char(Polarization pol) { return pol == Polarization::H ? 'H' : 'V'; }

PolarizedMode PolarizedMode::from_index(std::size_t index) {
    return PolarizedMode{static_cast<int>(index / 2), (index % 2 == 0) ? Polarization::H : Polarization::V};
}

std::string to_string(PolarizedMode mode) { return std::to_string(mode.port) + to_char(mode.pol); }

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) {
            throw std::invalid_argument("occupation counts must be non-negative");
        }
        total_ += c;
    }
}

OccupationVector::OccupationVector(std::initializer_list<int> counts) : OccupationVector(std::vector<int>(counts)) {}

std::string OccupationVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out + ")";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays exact because C(n-k+i, i) is integral.
        std::uint64_t g = std::gcd(result, i);
        std::uint64_t r = result / g, d = i / g;
        std::uint64_t m = (n - k + i) / d;
        if (r > std::numeric_limits<std::uint64_t>::max() / m) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = r * m;
    }
    return result;
}

std::uint64_t sector_dimension(int num_modes, int total_photons) {
    if (num_modes < 0 || total_photons < 0) return 0;
    if (num_modes == 0) return total_photons == 0 ? 1 : 0;
    return binomial(static_cast<std::uint64_t>(total_photons + num_modes - 1),
                    static_cast<std::uint64_t>(total_photons));
}

namespace {

void enumerate_into(std::vector<int> &prefix, int mode, int remaining, std::vector<OccupationVector> &out) {
    const int num_modes = static_cast<int>(prefix.size());
    if (mode == num_modes - 1) {
        prefix[mode] = remaining;
        out.emplace_back(prefix);
        return;
    }
    for (int n = remaining; n >= 0; --n) {
        prefix[mode] = n;
        enumerate_into(prefix, mode + 1, remaining - n, out);
    }
}

}  // namespace

FockBasis::FockBasis(int num_modes, int total_photons, BasisLimits limits)
    : num_modes_(num_modes), total_photons_(total_photons) {
    if (num_modes < 0 || total_photons < 0) {
        throw std::invalid_argument("mode count and photon number must be non-negative");
    }
    if (total_photons > limits.max_photons) {
        throw std::length_error("photon number " + std::to_string(total_photons) + " exceeds cap " +
                                std::to_string(limits.max_photons));
    }
    const std::uint64_t dim = sector_dimension(num_modes, total_photons);
    if (dim > limits.max_states) {
        throw std::length_error("sector of " + std::to_string(num_modes) + " modes and " +
                                std::to_string(total_photons) + " photons exceeds the state cap");
    }
    states_.reserve(dim);
    if (num_modes == 0) {
        if (total_photons == 0) states_.emplace_back();
    } else {
        std::vector<int> prefix(static_cast<std::size_t>(num_modes), 0);
        enumerate_into(prefix, 0, total_photons, states_);
    }
    for (std::size_t k = 0; k < states_.size(); ++k) {
        index_.emplace(states_[k], k);
    }
}

std::optional<std::size_t> FockBasis::find(const OccupationVector &occ) const {
    auto it = index_.find(occ);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FockBasis::index_of(const OccupationVector &occ) const {
    if (auto k = find(occ)) return *k;
    throw std::out_of_range("occupation " + occ.to_string() + " is not in the basis");
}

BasisPtr enumerate_basis(int num_modes, int total_photons, BasisLimits limits) {
    return std::make_shared<const FockBasis>(num_modes, total_photons, limits);
}

StateVector::StateVector(BasisPtr basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
    if (!basis_) throw std::invalid_argument("state vector needs a basis");
    if (static_cast<std::size_t>(amplitudes_.size()) != basis_->size()) {
        throw std::invalid_argument("amplitude count does not match basis size");
    }
}

StateVector StateVector::zero(BasisPtr basis) {
    const auto n = static_cast<Eigen::Index>(basis->size());
    return StateVector(std::move(basis), Eigen::VectorXcd::Zero(n));
}

StateVector StateVector::basis_state(BasisPtr basis, const OccupationVector &occ, Complex amplitude) {
    const std::size_t k = basis->index_of(occ);
    StateVector s = zero(std::move(basis));
    s.amplitudes_[static_cast<Eigen::Index>(k)] = amplitude;
    return s;
}

Complex StateVector::amplitude(const OccupationVector &occ) const {
    if (auto k = basis_->find(occ)) return (*this)[*k];
    return 0.0;
}

StateVector StateVector::operator+(const StateVector &other) const {
    if (!basis_->same_sector(other.basis())) {
        throw std::invalid_argument("cannot add states from different sectors");
    }
    return StateVector(basis_, amplitudes_ + other.amplitudes_);
}

StateVector StateVector::operator*(Complex scale) const { return StateVector(basis_, amplitudes_ * scale); }

Complex inner_product(const StateVector &s1, const StateVector &s2) {
    if (!s1.basis().same_sector(s2.basis())) {
        throw std::invalid_argument("inner product of states from different sectors");
    }
    return s1.amplitudes().dot(s2.amplitudes());
}

Complex LogicalAmplitudes::operator[](int level) const {
    switch (level) {
        case 0:
            return alpha;
        case 1:
            return beta;
        case 2:
            return gamma;
        default:
            throw std::out_of_range("logical level must be 0, 1 or 2");
    }
}

std::vector<Sector> embed_logical(const LogicalAmplitudes &amplitudes, PolarizedMode target, PolarizedMode ancilla,
                                  int num_ports, BasisLimits limits) {
    if (std::abs(amplitudes.norm_squared() - 1.0) > 1e-12) {
        throw std::invalid_argument("logical amplitudes are not normalized");
    }
    if (target == ancilla) {
        throw std::invalid_argument("target and ancilla modes must be distinct");
    }
    for (const auto &m : {target, ancilla}) {
        if (m.port < 0 || m.port >= num_ports) {
            throw std::invalid_argument("mode " + to_string(m) + " is outside the circuit");
        }
    }
    const int num_modes = 2 * num_ports;
    std::vector<Sector> sectors;
    sectors.reserve(3);
    for (int level = 0; level < 3; ++level) {
        std::vector<int> counts(static_cast<std::size_t>(num_modes), 0);
        counts[target.index()] = level;
        counts[ancilla.index()] = 1;
        auto basis = enumerate_basis(num_modes, level + 1, limits);
        const Complex amp = amplitudes[level];
        sectors.push_back(Sector{level, amp, StateVector::basis_state(basis, OccupationVector(counts), amp)});
    }
    return sectors;
}

double total_norm_squared(std::span<const Sector> sectors) {
    double total = 0.0;
    for (const auto &s : sectors) total += s.state.norm_squared();
    return total;
}

}  // namespace nlsgate
