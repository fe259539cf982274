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

#ifndef NLSGATE_NLS_GATE_HPP
#define NLSGATE_NLS_GATE_HPP

#include <array>
#include <string_view>

#include "nlsgate/fock.hpp"
#include "nlsgate/heralding.hpp"
#include "nlsgate/mode_unitary.hpp"

namespace nlsgate {

/// Rotator angles of the single-ancilla sign gate, in radians.
struct NlsParams {
    double sigma = 0.0;  // rotator on the input mode
    double theta = 0.0;  // rotator on the through arm, before the V detector

    friend bool operator==(const NlsParams &, const NlsParams &) = default;
};

/// Conditional amplitudes on |0_H>, |1_H>, |2_H> for the logical inputs
/// |0>, |1>, |2>. Two-photon states carry the Fock normalization
/// |2> = (a^dag)^2 / sqrt 2 |vac>.
struct GateCoefficients {
    Complex c0{};
    Complex c1{};
    Complex c2{};

    Complex operator[](int level) const { return level == 0 ? c0 : level == 1 ? c1 : c2; }
    double max_deviation(const GateCoefficients &other) const;
};

enum class Method { ClosedForm, Simulated };

std::string_view to_string(Method m);

struct GateReport {
    NlsParams params;
    GateCoefficients coefficients;
    double success_probability = 0.0;       // |c0|^2, exact where the gate is the sign gate
    double mean_success_probability = 0.0;  // (|c0|^2 + |c1|^2 + |c2|^2) / 3, average over uniform inputs
    double residual = 0.0;
    Method method = Method::ClosedForm;
};

/// Closed-form optimum: A = sqrt(21 - 7 sqrt 2) / 7, theta* = arccos A,
/// sigma* = arccos((1 - 2 sqrt 2) A), success A^2 = (3 - sqrt 2) / 7.
struct OptimalPoint {
    double a = 0.0;
    double theta_star = 0.0;
    double sigma_star = 0.0;
    double success = 0.0;

    NlsParams params() const { return {sigma_star, theta_star}; }
};

OptimalPoint optimal_params();

/// Success probability of the original four-mode construction, kept as a
/// comparison figure.
inline constexpr double kKlmSuccessProbability = 0.25;
/// The rounded value quoted for A^2.
inline constexpr double kQuotedSuccessProbability = 0.227;

/// c0 = cos theta, c1 = cos sigma cos 2theta,
/// c2 = cos^2 sigma cos theta (1 - 3 sin^2 theta).
GateCoefficients closed_form_coefficients(NlsParams p);

/// |c1 - c0|^2 + |c2 + c0|^2; zero exactly when the conditional map is the
/// sign gate up to an overall scale.
double nls_residual(Complex c0, Complex c1, Complex c2);
inline double nls_residual(const GateCoefficients &c) { return nls_residual(c.c0, c.c1, c.c2); }

GateReport closed_form_report(NlsParams p);

/// Port layout of the one-ancilla sign gate circuit.
namespace sign_gate {

inline constexpr int kInputPort = 0;
inline constexpr int kAncillaPort = 1;
inline constexpr int kDetectorPort = 2;  // reflected PBS output, must see no photons
inline constexpr int kThroughPort = 3;   // transmitted PBS output, rotated then analyzed
inline constexpr int kNumPorts = 4;

inline constexpr PolarizedMode kTargetMode{kInputPort, Polarization::H};
inline constexpr PolarizedMode kAncillaMode{kAncillaPort, Polarization::V};
inline constexpr PolarizedMode kOutputMode{kThroughPort, Polarization::H};

/// sigma rotator on the input port, PBS mixing input and ancilla (H through,
/// V reflected toward the detector arm), theta rotator on the through arm.
Circuit circuit(NlsParams p);

/// No photons anywhere except one V photon on the through arm; the through
/// arm's H mode is the only kept mode. The emptied input/ancilla ports are
/// pinned to vacuum.
HeraldPattern herald();

}  // namespace sign_gate

/// Heralded output of the circuit for a given logical input: amplitudes on
/// |0_H>, |1_H>, |2_H> of the output mode and the heralding probability.
struct HeraldedOutput {
    std::array<Complex, 3> amplitudes{};
    double probability = 0.0;
};

HeraldedOutput run_sign_gate(NlsParams p, const LogicalAmplitudes &input);

/// Full Fock-space simulation: each logical basis state is sent through the
/// composed circuit and conditioned, and the output-mode amplitudes are read
/// off.
GateReport simulate_nls(NlsParams p);

}  // namespace nlsgate

#endif
