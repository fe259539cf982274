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

#include "nlsgate/mode_unitary.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlsgate {

namespace {

void check_dim(int dim) {
    if (dim <= 0 || dim % 2 != 0) {
        throw std::invalid_argument("mode dimension must be a positive even number, got " + std::to_string(dim));
    }
}

void check_port(int port, int dim) {
    if (port < 0 || 2 * port >= dim) {
        throw std::out_of_range("port " + std::to_string(port) + " is outside a " + std::to_string(dim) +
                                "-mode circuit");
    }
}

std::size_t mode(int port, Polarization pol) { return PolarizedMode{port, pol}.index(); }

}  // namespace

double unitarity_error(const Matrix &m) {
    if (m.rows() != m.cols()) return INFINITY;
    const Matrix defect = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return defect.size() == 0 ? 0.0 : defect.cwiseAbs().maxCoeff();
}

ModeUnitary::ModeUnitary(Matrix entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("mode unitary must be square");
    }
    const double err = nlsgate::unitarity_error(entries_);
    if (!(err <= tol)) {
        std::ostringstream msg;
        msg << "matrix is not unitary (max |U^dag U - I| = " << err << ")";
        throw std::invalid_argument(msg.str());
    }
}

ModeUnitary ModeUnitary::identity(int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    return ModeUnitary(Matrix::Identity(dim, dim), Unchecked{});
}

double ModeUnitary::unitarity_error() const { return nlsgate::unitarity_error(entries_); }

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(entries_.adjoint(), Unchecked{}); }

ModeUnitary operator*(const ModeUnitary &after, const ModeUnitary &before) {
    if (after.dim() != before.dim()) {
        throw std::invalid_argument("cannot compose unitaries of different dimension");
    }
    return ModeUnitary(after.entries_ * before.entries_, ModeUnitary::Unchecked{});
}

ModeUnitary rotator_unitary(double angle, int port, int dim) {
    check_dim(dim);
    check_port(port, dim);
    const auto h = static_cast<Eigen::Index>(mode(port, Polarization::H));
    const auto v = static_cast<Eigen::Index>(mode(port, Polarization::V));
    const double c = std::cos(angle), s = std::sin(angle);
    Matrix u = Matrix::Identity(dim, dim);
    u(h, h) = c;
    u(v, h) = s;
    u(h, v) = -s;
    u(v, v) = c;
    return ModeUnitary(std::move(u));
}

ModeUnitary pbs_unitary(int port_a, int port_b, int dim, PbsRouting routing) {
    check_dim(dim);
    check_port(port_a, dim);
    check_port(port_b, dim);
    if (port_a == port_b) throw std::invalid_argument("polarizing beamsplitter ports must differ");
    const int through = routing.through.value_or(port_a);
    const int reflect = routing.reflect.value_or(port_b);
    check_port(through, dim);
    check_port(reflect, dim);
    if (through == reflect) throw std::invalid_argument("polarizing beamsplitter outputs must differ");

    const bool in_place = (through == port_a && reflect == port_b);
    if (!in_place) {
        std::set<int> ports{port_a, port_b, through, reflect};
        if (ports.size() != 4) {
            throw std::invalid_argument("polarizing beamsplitter outputs must either equal the inputs or be disjoint");
        }
    }

    // Permutation src -> dst on flattened modes.
    std::vector<std::pair<std::size_t, std::size_t>> routes = {
        {mode(port_a, Polarization::H), mode(through, Polarization::H)},
        {mode(port_b, Polarization::V), mode(through, Polarization::V)},
        {mode(port_a, Polarization::V), mode(reflect, Polarization::V)},
        {mode(port_b, Polarization::H), mode(reflect, Polarization::H)},
    };
    if (!in_place) {
        const std::size_t n = routes.size();
        for (std::size_t i = 0; i < n; ++i) routes.emplace_back(routes[i].second, routes[i].first);
    }

    Matrix u = Matrix::Identity(dim, dim);
    for (const auto &[src, dst] : routes) u.col(static_cast<Eigen::Index>(src)).setZero();
    for (const auto &[src, dst] : routes) {
        u(static_cast<Eigen::Index>(dst), static_cast<Eigen::Index>(src)) = 1.0;
    }
    return ModeUnitary(std::move(u));
}

ModeUnitary beamsplitter_unitary(int port_a, int port_b, double transmittance, int dim) {
    check_dim(dim);
    check_port(port_a, dim);
    check_port(port_b, dim);
    if (port_a == port_b) throw std::invalid_argument("beamsplitter ports must differ");
    if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
        throw std::invalid_argument("beamsplitter transmittance must lie in [0, 1]");
    }
    const double t = std::sqrt(transmittance), r = std::sqrt(1.0 - transmittance);
    Matrix u = Matrix::Identity(dim, dim);
    for (Polarization pol : {Polarization::H, Polarization::V}) {
        const auto a = static_cast<Eigen::Index>(mode(port_a, pol));
        const auto b = static_cast<Eigen::Index>(mode(port_b, pol));
        u(a, a) = t;
        u(b, a) = r;
        u(a, b) = r;
        u(b, b) = -t;
    }
    return ModeUnitary(std::move(u));
}

ModeUnitary phase_shift_unitary(PolarizedMode m, double phase, int dim) {
    check_dim(dim);
    check_port(m.port, dim);
    Matrix u = Matrix::Identity(dim, dim);
    const auto k = static_cast<Eigen::Index>(m.index());
    u(k, k) = std::polar(1.0, phase);
    return ModeUnitary(std::move(u));
}

std::string describe(const CircuitElement &element) {
    std::ostringstream out;
    std::visit(
        [&out](const auto &e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Rotator>) {
                out << "rotator(port=" << e.port << ", angle=" << e.angle << ")";
            } else if constexpr (std::is_same_v<T, PolarizingBeamsplitter>) {
                out << "pbs(a=" << e.port_a << ", b=" << e.port_b << ")";
            } else if constexpr (std::is_same_v<T, Beamsplitter>) {
                out << "bs(a=" << e.port_a << ", b=" << e.port_b << ", t=" << e.transmittance << ")";
            } else {
                out << "phase(mode=" << to_string(e.mode) << ", phase=" << e.phase << ")";
            }
        },
        element);
    return out.str();
}

Circuit::Circuit(int num_ports) : num_ports_(num_ports) {
    if (num_ports <= 0) throw std::invalid_argument("circuit needs at least one port");
}

Circuit &Circuit::add(CircuitElement element) {
    // Validate bindings eagerly so a bad element is reported where it is added.
    (void)element_unitary(element, num_modes());
    elements_.push_back(std::move(element));
    return *this;
}

ModeUnitary element_unitary(const CircuitElement &element, int dim) {
    return std::visit(
        [dim](const auto &e) -> ModeUnitary {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, Rotator>) {
                return rotator_unitary(e.angle, e.port, dim);
            } else if constexpr (std::is_same_v<T, PolarizingBeamsplitter>) {
                return pbs_unitary(e.port_a, e.port_b, dim, e.routing);
            } else if constexpr (std::is_same_v<T, Beamsplitter>) {
                return beamsplitter_unitary(e.port_a, e.port_b, e.transmittance, dim);
            } else {
                return phase_shift_unitary(e.mode, e.phase, dim);
            }
        },
        element);
}

ModeUnitary compose(const Circuit &circuit) {
    ModeUnitary total = ModeUnitary::identity(circuit.num_modes());
    for (const auto &element : circuit.elements()) {
        total = element_unitary(element, circuit.num_modes()) * total;
    }
    return total;
}

}  // namespace nlsgate
