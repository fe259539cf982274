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

#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "nlsgate/param_search.hpp"

#ifndef NLSGATE_VERSION
#define NLSGATE_VERSION "0.0.0"
#endif

namespace nlsgate::cli {

double report_number(double x) {
    if (!std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
    const double rounded = std::strtod(buf, nullptr);
    return rounded == 0.0 ? 0.0 : rounded;
}

Json complex_json(Complex z) { return Json{{"re", report_number(z.real())}, {"im", report_number(z.imag())}}; }

Json angle_json(double radians) {
    return Json{{"degrees", report_number(radians / kDegree)}, {"radians", report_number(radians)}};
}

Json coefficients_json(const GateCoefficients &c) {
    return Json{{"c0", complex_json(c.c0)}, {"c1", complex_json(c.c1)}, {"c2", complex_json(c.c2)}};
}

Json gate_report_json(const GateReport &r) {
    return Json{
        {"method", std::string(to_string(r.method))},
        {"coefficients", coefficients_json(r.coefficients)},
        {"success_probability", report_number(r.success_probability)},
        {"mean_success_probability", report_number(r.mean_success_probability)},
        {"residual", report_number(r.residual)},
    };
}

Json comparison_json() {
    return Json{
        {"quoted_value", kQuotedSuccessProbability},
        {"klm_value", kKlmSuccessProbability},
        {"closed_form_optimum", report_number(optimal_params().success)},
    };
}

std::string render(const Json &report) { return report.dump(2) + "\n"; }

std::string tool_version() { return NLSGATE_VERSION; }

}  // namespace nlsgate::cli
