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

#ifndef NLSGATE_CLI_CIRCUIT_FILE_HPP
#define NLSGATE_CLI_CIRCUIT_FILE_HPP

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlsgate/fock.hpp"
#include "nlsgate/heralding.hpp"
#include "nlsgate/mode_unitary.hpp"

namespace nlsgate::cli {

/// Parse failure anchored to a line of the circuit file.
class CircuitParseError : public std::runtime_error {
   public:
    CircuitParseError(std::string source, int line, const std::string &message);

    const std::string &source() const { return source_; }
    int line() const { return line_; }

   private:
    std::string source_;
    int line_;
};

struct LogicalInput {
    LogicalAmplitudes amplitudes;
    PolarizedMode target;
    PolarizedMode ancilla;
};

struct FockTerm {
    OccupationVector occupation;
    Complex amplitude;
};

struct ExplicitInput {
    std::vector<FockTerm> terms;
};

/// A parsed circuit description. Angles are converted from degrees to
/// radians while parsing.
struct CircuitFile {
    Circuit circuit{1};
    std::variant<std::monostate, LogicalInput, ExplicitInput> input;
    HeraldPattern herald{2};
    std::optional<PolarizedMode> output;
};

/// Degrees with an optional "deg" suffix, or the literal "optimal".
/// Returns radians.
double parse_angle(std::string_view text, double optimal_radians);

/// "<port><H|V>", e.g. "3V".
PolarizedMode parse_mode(std::string_view text);

/// "re" or "re,im".
Complex parse_complex(std::string_view text);

CircuitFile parse_circuit(std::istream &in, const std::string &source = "<input>");
CircuitFile load_circuit(const std::string &path);

}  // namespace nlsgate::cli

#endif
