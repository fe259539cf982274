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

#include "nlsgate/nls_gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlsgate/evolution.hpp"

namespace nlsgate {

double GateCoefficients::max_deviation(const GateCoefficients &other) const {
    return std::max({std::abs(c0 - other.c0), std::abs(c1 - other.c1), std::abs(c2 - other.c2)});
}

std::string_view to_string(Method m) { return m == Method::ClosedForm ? "closed-form" : "simulated"; }

OptimalPoint optimal_params() {
    const double root2 = std::sqrt(2.0);
    OptimalPoint p;
    p.a = std::sqrt(21.0 - 7.0 * root2) / 7.0;
    p.theta_star = std::acos(p.a);
    p.sigma_star = std::acos((1.0 - 2.0 * root2) * p.a);
    p.success = p.a * p.a;
    return p;
}

GateCoefficients closed_form_coefficients(NlsParams p) {
    const double cs = std::cos(p.sigma);
    const double ct = std::cos(p.theta);
    const double st = std::sin(p.theta);
    return {ct, cs * std::cos(2.0 * p.theta), cs * cs * ct * (1.0 - 3.0 * st * st)};
}

double nls_residual(Complex c0, Complex c1, Complex c2) { return std::norm(c1 - c0) + std::norm(c2 + c0); }

namespace {

GateReport make_report(NlsParams p, GateCoefficients c, Method method) {
    GateReport r;
    r.params = p;
    r.coefficients = c;
    r.success_probability = std::norm(c.c0);
    r.mean_success_probability = (std::norm(c.c0) + std::norm(c.c1) + std::norm(c.c2)) / 3.0;
    r.residual = nls_residual(c);
    r.method = method;
    return r;
}

}  // namespace

GateReport closed_form_report(NlsParams p) { return make_report(p, closed_form_coefficients(p), Method::ClosedForm); }

namespace sign_gate {

Circuit circuit(NlsParams p) {
    Circuit c(kNumPorts);
    c.add(Rotator{kInputPort, p.sigma});
    c.add(PolarizingBeamsplitter{kInputPort, kAncillaPort, PbsRouting{kThroughPort, kDetectorPort}});
    c.add(Rotator{kThroughPort, p.theta});
    return c;
}

HeraldPattern herald() {
    HeraldPattern h(2 * kNumPorts);
    for (int port : {kInputPort, kAncillaPort, kDetectorPort}) {
        h.require({port, Polarization::H}, Exactly{0});
        h.require({port, Polarization::V}, Exactly{0});
    }
    h.require({kThroughPort, Polarization::V}, Exactly{1});
    return h;
}

}  // namespace sign_gate

namespace {

// Amplitude of n photons on the single kept mode for each conditioned sector.
HeraldedOutput read_output(const std::vector<ConditionalState> &conditioned) {
    HeraldedOutput out;
    for (std::size_t level = 0; level < conditioned.size(); ++level) {
        const ConditionalState &cs = conditioned[level];
        out.probability += cs.probability;
        const StateVector &kept = cs.state();
        out.amplitudes[level] = kept.amplitude(OccupationVector{static_cast<int>(level)});
    }
    return out;
}

}  // namespace

HeraldedOutput run_sign_gate(NlsParams p, const LogicalAmplitudes &input) {
    const ModeUnitary u = compose(sign_gate::circuit(p));
    const auto sectors = embed_logical(input, sign_gate::kTargetMode, sign_gate::kAncillaMode, sign_gate::kNumPorts);
    return read_output(condition(nlsgate::apply(u, std::span<const Sector>(sectors)), sign_gate::herald()));
}

GateReport simulate_nls(NlsParams p) {
    const ModeUnitary u = compose(sign_gate::circuit(p));
    const HeraldPattern h = sign_gate::herald();
    std::array<Complex, 3> c{};
    for (int level = 0; level < 3; ++level) {
        LogicalAmplitudes unit;
        (level == 0 ? unit.alpha : level == 1 ? unit.beta : unit.gamma) = 1.0;
        const auto sectors = embed_logical(unit, sign_gate::kTargetMode, sign_gate::kAncillaMode, sign_gate::kNumPorts);
        const auto l = static_cast<std::size_t>(level);
        c[l] = read_output(condition(nlsgate::apply(u, std::span<const Sector>(sectors)), h)).amplitudes[l];
    }
    return make_report(p, GateCoefficients{c[0], c[1], c[2]}, Method::Simulated);
}

}  // namespace nlsgate
