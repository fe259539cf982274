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

#ifndef NLSGATE_MODE_UNITARY_HPP
#define NLSGATE_MODE_UNITARY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nlsgate/fock.hpp"

namespace nlsgate {

using Matrix = Eigen::MatrixXcd;

/// Linear map on creation operators: a_i^dag -> sum_j U(j, i) a_j^dag.
/// Column i is the image of mode i.
class ModeUnitary {
   public:
    static constexpr double kUnitarityTolerance = 1e-10;

    /// Throws std::invalid_argument unless `entries` is square and unitary
    /// within `tol` entrywise.
    explicit ModeUnitary(Matrix entries, double tol = kUnitarityTolerance);

    static ModeUnitary identity(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix &matrix() const { return entries_; }
    Complex operator()(int row, int col) const { return entries_(row, col); }

    /// Largest entry of |U^dag U - I|.
    double unitarity_error() const;

    ModeUnitary adjoint() const;

    /// `after * before`: the map that applies `before` first.
    friend ModeUnitary operator*(const ModeUnitary &after, const ModeUnitary &before);

   private:
    struct Unchecked {};
    ModeUnitary(Matrix entries, Unchecked) : entries_(std::move(entries)) {}

    Matrix entries_;
};

double unitarity_error(const Matrix &m);

/// a_H^dag -> cos x a_H^dag + sin x a_V^dag, a_V^dag -> -sin x a_H^dag + cos x a_V^dag.
ModeUnitary rotator_unitary(double angle, int port, int dim);

/// Output ports of a polarizing beamsplitter. When unset the outputs reuse the
/// input ports: `through` = port_a and `reflect` = port_b.
struct PbsRouting {
    std::optional<int> through;
    std::optional<int> reflect;
};

/// Polarizing beamsplitter with real, phase-free routing. H is transmitted and
/// V reflected:
///   a_H -> through_H, b_V -> through_V, a_V -> reflect_V, b_H -> reflect_H.
/// With distinct output ports the element is the involution that also sends
/// the output ports' modes back to the inputs.
ModeUnitary pbs_unitary(int port_a, int port_b, int dim, PbsRouting routing = {});

/// Per-polarization block [[sqrt t, sqrt(1-t)], [sqrt(1-t), -sqrt t]] on both
/// H and V of the two ports.
ModeUnitary beamsplitter_unitary(int port_a, int port_b, double transmittance, int dim);

ModeUnitary phase_shift_unitary(PolarizedMode mode, double phase, int dim);

struct Rotator {
    int port = 0;
    double angle = 0.0;  // radians
};

struct PolarizingBeamsplitter {
    int port_a = 0;
    int port_b = 1;
    PbsRouting routing;
};

struct Beamsplitter {
    int port_a = 0;
    int port_b = 1;
    double transmittance = 0.5;
};

struct PhaseShift {
    PolarizedMode mode;
    double phase = 0.0;  // radians
};

using CircuitElement = std::variant<Rotator, PolarizingBeamsplitter, Beamsplitter, PhaseShift>;

std::string describe(const CircuitElement &element);

/// Ordered optical elements on `num_ports` spatial ports; the first element
/// listed acts first.
class Circuit {
   public:
    explicit Circuit(int num_ports);

    Circuit &add(CircuitElement element);

    int num_ports() const { return num_ports_; }
    int num_modes() const { return 2 * num_ports_; }
    const std::vector<CircuitElement> &elements() const { return elements_; }

   private:
    int num_ports_;
    std::vector<CircuitElement> elements_;
};

ModeUnitary element_unitary(const CircuitElement &element, int dim);

/// Product of the element unitaries in application order.
ModeUnitary compose(const Circuit &circuit);

}  // namespace nlsgate

#endif
