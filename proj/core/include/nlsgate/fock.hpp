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

#ifndef NLSGATE_FOCK_HPP
#define NLSGATE_FOCK_HPP

#include <Eigen/Dense>

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nlsgate {

using Complex = std::complex<double>;

enum class Polarization : std::uint8_t { H = 0, V = 1 };

char to_char(Polarization pol);

/// A polarization mode of one spatial port. Modes are flattened port-major,
/// H before V: index = 2 * port + pol.
struct PolarizedMode {
    int port = 0;
    Polarization pol = Polarization::H;

    constexpr std::size_t index() const {
        return static_cast<std::size_t>(port) * 2 + static_cast<std::size_t>(pol);
    }
    static PolarizedMode from_index(std::size_t index);

    friend auto operator<=>(const PolarizedMode &, const PolarizedMode &) = default;
};

std::string to_string(PolarizedMode mode);

/// Photon count per flattened mode.
class OccupationVector {
   public:
    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> counts);
    OccupationVector(std::initializer_list<int> counts);

    std::size_t num_modes() const { return counts_.size(); }
    int total() const { return total_; }
    int operator[](std::size_t mode) const { return counts_[mode]; }
    std::span<const int> counts() const { return counts_; }

    std::string to_string() const;

    friend bool operator==(const OccupationVector &a, const OccupationVector &b) { return a.counts_ == b.counts_; }
    friend std::strong_ordering operator<=>(const OccupationVector &a, const OccupationVector &b) {
        return a.counts_ <=> b.counts_;
    }

   private:
    std::vector<int> counts_;
    int total_ = 0;
};

/// Guards against runaway enumeration.
struct BasisLimits {
    int max_photons = 6;
    std::size_t max_states = std::size_t{1} << 20;
};

/// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of occupation vectors of `num_modes` modes holding `total_photons`.
std::uint64_t sector_dimension(int num_modes, int total_photons);

/// All occupation vectors of a fixed total photon number, in lexicographically
/// descending order: (n,0,...,0) first, (0,...,0,n) last.
class FockBasis {
   public:
    FockBasis(int num_modes, int total_photons, BasisLimits limits = {});

    int num_modes() const { return num_modes_; }
    int total_photons() const { return total_photons_; }
    std::size_t size() const { return states_.size(); }
    const std::vector<OccupationVector> &states() const { return states_; }
    const OccupationVector &state(std::size_t k) const { return states_.at(k); }

    std::optional<std::size_t> find(const OccupationVector &occ) const;
    /// Throws std::out_of_range when `occ` is not in this basis.
    std::size_t index_of(const OccupationVector &occ) const;

    /// Same mode count and photon number, hence identical ordering.
    bool same_sector(const FockBasis &other) const {
        return num_modes_ == other.num_modes_ && total_photons_ == other.total_photons_;
    }

   private:
    int num_modes_;
    int total_photons_;
    std::vector<OccupationVector> states_;
    std::map<OccupationVector, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

BasisPtr enumerate_basis(int num_modes, int total_photons, BasisLimits limits = {});

/// Complex amplitudes over one fixed-photon-number sector.
class StateVector {
   public:
    StateVector(BasisPtr basis, Eigen::VectorXcd amplitudes);

    static StateVector zero(BasisPtr basis);
    static StateVector basis_state(BasisPtr basis, const OccupationVector &occ, Complex amplitude = 1.0);

    const FockBasis &basis() const { return *basis_; }
    const BasisPtr &basis_ptr() const { return basis_; }
    const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }
    std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }

    Complex operator[](std::size_t k) const { return amplitudes_[static_cast<Eigen::Index>(k)]; }
    /// Amplitude of `occ`; zero if `occ` lies outside the basis.
    Complex amplitude(const OccupationVector &occ) const;

    double norm_squared() const { return amplitudes_.squaredNorm(); }
    double norm() const { return amplitudes_.norm(); }
    bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }

    StateVector operator+(const StateVector &other) const;
    StateVector operator*(Complex scale) const;
    friend StateVector operator*(Complex scale, const StateVector &s) { return s * scale; }

   private:
    BasisPtr basis_;
    Eigen::VectorXcd amplitudes_;
};

/// <s1|s2>, conjugate-linear in `s1`. Throws std::invalid_argument on a
/// sector mismatch.
Complex inner_product(const StateVector &s1, const StateVector &s2);

/// One photon-number sector of a state that spans several sectors.
struct Sector {
    int logical_level = 0;
    Complex logical_amplitude{};
    StateVector state;
};

/// Input amplitudes of the |0>, |1>, |2> logical states.
struct LogicalAmplitudes {
    Complex alpha{};
    Complex beta{};
    Complex gamma{};

    double norm_squared() const { return std::norm(alpha) + std::norm(beta) + std::norm(gamma); }
    Complex operator[](int level) const;
};

/// Joint input state for a logical qutrit on `target` plus one ancilla photon
/// on `ancilla`. Level n lives in the (n+1)-photon sector, so the result holds
/// three sectors, one per level, each scaled by its logical amplitude.
///
/// Throws std::invalid_argument when the amplitudes are not normalized within
/// 1e-12, or when target and ancilla coincide or fall outside `num_ports`.
std::vector<Sector> embed_logical(const LogicalAmplitudes &amplitudes, PolarizedMode target, PolarizedMode ancilla,
                                  int num_ports, BasisLimits limits = {});

double total_norm_squared(std::span<const Sector> sectors);

}  // namespace nlsgate

#endif
