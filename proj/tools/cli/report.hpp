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

#ifndef NLSGATE_CLI_REPORT_HPP
#define NLSGATE_CLI_REPORT_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "nlsgate/nls_gate.hpp"

namespace nlsgate::cli {

using Json = nlohmann::json;  // std::map-backed, so keys serialize sorted

inline constexpr int kReportDigits = 12;

/// Rounds to kReportDigits significant digits; -0 becomes 0.
double report_number(double x);

Json complex_json(Complex z);
Json angle_json(double radians);
Json coefficients_json(const GateCoefficients &c);
Json gate_report_json(const GateReport &r);
Json comparison_json();

/// Indented, key-sorted text with a trailing newline.
std::string render(const Json &report);

std::string tool_version();

}  // namespace nlsgate::cli

#endif
