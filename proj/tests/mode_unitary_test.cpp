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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace nlsgate;
namespace nt = nlsgate::testing;

namespace {

constexpr int kH0 = 0, kV0 = 1;

double max_diff(const Matrix &a, const Matrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Rotator, zero_angle_is_identity) {
    ASSERT_EQ(max_diff(rotator_unitary(0.0, 0, 4).matrix(), Matrix::Identity(4, 4)), 0.0);
}

TEST(Rotator, quarter_turn_sends_h_to_v_and_v_to_minus_h) {
    const auto u = rotator_unitary(std::numbers::pi / 2, 0, 2);
    // Column i is the image of a_i^dag.
    ASSERT_NEAR(std::abs(u(kV0, kH0) - 1.0), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(u(kH0, kV0) + 1.0), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(u(kH0, kH0)), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(u(kV0, kV0)), 0.0, 1e-15);
}

TEST(Rotator, eighth_turn_entries) {
    const auto u = rotator_unitary(std::numbers::pi / 4, 1, 4);
    const double r = 1.0 / std::sqrt(2.0);
    ASSERT_NEAR(u(2, 2).real(), r, 1e-15);
    ASSERT_NEAR(u(3, 2).real(), r, 1e-15);
    ASSERT_NEAR(u(2, 3).real(), -r, 1e-15);
    ASSERT_NEAR(u(3, 3).real(), r, 1e-15);
    ASSERT_EQ(u(0, 0), Complex(1.0));
}

TEST(Rotator, angles_add) {
    for (int trial = 0; trial < 100; ++trial) {
        const double x = nt::uniform(-7, 7), y = nt::uniform(-7, 7);
        const auto lhs = rotator_unitary(x, 1, 6) * rotator_unitary(y, 1, 6);
        ASSERT_LT(max_diff(lhs.matrix(), rotator_unitary(x + y, 1, 6).matrix()), 1e-12);
    }
}

TEST(Rotator, port_out_of_range) {
    ASSERT_THROW(rotator_unitary(0.1, 2, 4), std::out_of_range);
    ASSERT_THROW(rotator_unitary(0.1, -1, 4), std::out_of_range);
}

TEST(Pbs, four_port_routing) {
    // a=0, b=1, reflect c=2, through d=3.
    const auto u = pbs_unitary(0, 1, 8, PbsRouting{3, 2});
    auto image = [&](PolarizedMode m) { return u.matrix().col(static_cast<Eigen::Index>(m.index())); };
    auto unit = [](PolarizedMode m) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(8);
        e[static_cast<Eigen::Index>(m.index())] = 1.0;
        return e;
    };
    using P = Polarization;
    ASSERT_EQ(image({0, P::H}), unit({3, P::H}));
    ASSERT_EQ(image({1, P::V}), unit({3, P::V}));
    ASSERT_EQ(image({0, P::V}), unit({2, P::V}));
    ASSERT_EQ(image({1, P::H}), unit({2, P::H}));
    ASSERT_LT(u.unitarity_error(), 1e-15);
    // Involution.
    ASSERT_LT(max_diff((u * u).matrix(), Matrix::Identity(8, 8)), 1e-15);
}

TEST(Pbs, in_place_keeps_h_and_swaps_v) {
    const auto u = pbs_unitary(0, 1, 4);
    ASSERT_EQ(u(0, 0), Complex(1.0));  // a_H stays
    ASSERT_EQ(u(2, 2), Complex(1.0));  // b_H stays
    ASSERT_EQ(u(1, 3), Complex(1.0));  // b_V -> a_V
    ASSERT_EQ(u(3, 1), Complex(1.0));  // a_V -> b_V
}

TEST(Pbs, rejects_port_collisions) {
    ASSERT_THROW(pbs_unitary(1, 1, 8), std::invalid_argument);
    ASSERT_THROW(pbs_unitary(0, 1, 8, PbsRouting{3, 3}), std::invalid_argument);
    ASSERT_THROW(pbs_unitary(0, 1, 8, PbsRouting{0, 2}), std::invalid_argument);
    ASSERT_THROW(pbs_unitary(0, 5, 8), std::out_of_range);
}

TEST(Beamsplitter, full_transmission_is_identity) {
    const auto u = beamsplitter_unitary(0, 1, 1.0, 4);
    ASSERT_EQ(u.matrix()(0, 0), Complex(1.0));
    ASSERT_EQ(u.matrix()(2, 2), Complex(-1.0));  // -sqrt(t) on the second port
    ASSERT_EQ(u.matrix()(2, 0), Complex(0.0));
}

TEST(Beamsplitter, balanced_entries) {
    const auto u = beamsplitter_unitary(0, 1, 0.5, 4);
    const double r = 1.0 / std::sqrt(2.0);
    for (int pol = 0; pol < 2; ++pol) {
        ASSERT_NEAR(u(pol, pol).real(), r, 1e-15);
        ASSERT_NEAR(u(2 + pol, pol).real(), r, 1e-15);
        ASSERT_NEAR(u(pol, 2 + pol).real(), r, 1e-15);
        ASSERT_NEAR(u(2 + pol, 2 + pol).real(), -r, 1e-15);
    }
}

TEST(Beamsplitter, zero_transmission_swaps_ports) {
    const auto u = beamsplitter_unitary(0, 1, 0.0, 4);
    ASSERT_EQ(u(2, 0), Complex(1.0));
    ASSERT_EQ(u(0, 2), Complex(1.0));
    ASSERT_EQ(std::abs(u(0, 0)), 0.0);
}

TEST(Beamsplitter, transmittance_out_of_range) {
    ASSERT_THROW(beamsplitter_unitary(0, 1, 1.5, 4), std::invalid_argument);
    ASSERT_THROW(beamsplitter_unitary(0, 1, -0.1, 4), std::invalid_argument);
    ASSERT_THROW(beamsplitter_unitary(0, 1, std::nan(""), 4), std::invalid_argument);
}

TEST(ModeUnitary, constructors_are_unitary_for_random_parameters) {
    for (int trial = 0; trial < 200; ++trial) {
        const int ports = 2 + trial % 3;
        const int dim = 2 * ports;
        const double x = nt::uniform(-10, 10);
        ASSERT_LT(rotator_unitary(x, trial % ports, dim).unitarity_error(), 1e-10);
        ASSERT_LT(beamsplitter_unitary(0, 1, nt::uniform(0, 1), dim).unitarity_error(), 1e-10);
        ASSERT_LT(phase_shift_unitary({1, Polarization::V}, x, dim).unitarity_error(), 1e-10);
        ASSERT_LT(pbs_unitary(0, 1, dim).unitarity_error(), 1e-10);
    }
}

TEST(ModeUnitary, rejects_non_unitary_matrices) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 1) = 0.1;
    ASSERT_THROW(ModeUnitary{m}, std::invalid_argument);
    ASSERT_THROW(ModeUnitary{Matrix::Identity(2, 3)}, std::invalid_argument);
}

TEST(Compose, empty_circuit_is_identity) {
    const auto u = compose(Circuit(3));
    ASSERT_EQ(max_diff(u.matrix(), Matrix::Identity(6, 6)), 0.0);
}

TEST(Compose, opposite_rotations_cancel) {
    Circuit c(2);
    c.add(Rotator{1, 0.7}).add(Rotator{1, -0.7});
    ASSERT_LT(max_diff(compose(c).matrix(), Matrix::Identity(4, 4)), 1e-15);
}

TEST(Compose, first_element_acts_first) {
    Circuit c(2);
    c.add(Rotator{0, std::numbers::pi / 2}).add(PolarizingBeamsplitter{0, 1, {}});
    // H on port 0 -> V on port 0 -> reflected to V on port 1.
    const auto u = compose(c);
    ASSERT_NEAR(std::abs(u(3, 0) - 1.0), 0.0, 1e-15);
}

TEST(Compose, random_circuits_stay_unitary_and_associate) {
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c(4);
        for (int k = 0; k < 6; ++k) {
            switch (static_cast<int>(nt::uniform(0, 4))) {
                case 0:
                    c.add(Rotator{k % 4, nt::uniform(-4, 4)});
                    break;
                case 1:
                    c.add(PolarizingBeamsplitter{k % 4, (k + 1) % 4, {}});
                    break;
                case 2:
                    c.add(Beamsplitter{k % 4, (k + 2) % 4, nt::uniform(0, 1)});
                    break;
                default:
                    c.add(PhaseShift{{k % 4, Polarization::V}, nt::uniform(-4, 4)});
                    break;
            }
        }
        const auto u = compose(c);
        ASSERT_LT(u.unitarity_error(), 1e-10);

        const auto a = nt::random_unitary(8), b = nt::random_unitary(8), d = nt::random_unitary(8);
        ASSERT_LT(max_diff(((a * b) * d).matrix(), (a * (b * d)).matrix()), 1e-12);
    }
}

TEST(Circuit, rejects_bad_bindings_when_added) {
    Circuit c(2);
    ASSERT_THROW(c.add(Rotator{2, 0.1}), std::out_of_range);
    ASSERT_THROW(c.add(Beamsplitter{0, 1, 2.0}), std::invalid_argument);
    ASSERT_TRUE(c.elements().empty());
}
