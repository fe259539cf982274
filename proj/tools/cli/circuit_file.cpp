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

#include "cli/circuit_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "nlsgate/nls_gate.hpp"
#include "nlsgate/param_search.hpp"

namespace nlsgate::cli {

CircuitParseError::CircuitParseError(std::string source, int line, const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), source_(std::move(source)), line_(line) {}

namespace {

double parse_number(std::string_view text) {
    double value = 0.0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

int parse_int(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

// key=value arguments of one directive; each key may appear once and must be
// consumed.
class Arguments {
   public:
    Arguments(const std::vector<std::string> &tokens, std::size_t first) {
        for (std::size_t i = first; i < tokens.size(); ++i) {
            const std::string &tok = tokens[i];
            const std::size_t eq = tok.find('=');
            if (eq == std::string::npos) {
                flags_.insert(tok);
                continue;
            }
            const std::string key = tok.substr(0, eq);
            if (!values_.emplace(key, tok.substr(eq + 1)).second) {
                throw std::invalid_argument("duplicate argument '" + key + "'");
            }
        }
    }

    std::string take(const std::string &key) {
        auto v = take_optional(key);
        if (!v) throw std::invalid_argument("missing argument '" + key + "'");
        return *v;
    }

    std::optional<std::string> take_optional(const std::string &key) {
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        std::string v = it->second;
        values_.erase(it);
        return v;
    }

    bool take_flag(const std::string &flag) { return flags_.erase(flag) > 0; }

    void finish() const {
        if (!values_.empty()) throw std::invalid_argument("unknown argument '" + values_.begin()->first + "'");
        if (!flags_.empty()) throw std::invalid_argument("unexpected token '" + *flags_.begin() + "'");
    }

   private:
    std::map<std::string, std::string> values_;
    std::set<std::string> flags_;
};

double parse_rotator_angle(std::string_view text) {
    const OptimalPoint opt = optimal_params();
    if (text == "optimal-sigma") return opt.sigma_star;
    if (text == "optimal-theta") return opt.theta_star;
    return parse_angle(text, std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

double parse_angle(std::string_view text, double optimal_radians) {
    if (text == "optimal") {
        if (std::isnan(optimal_radians)) throw std::invalid_argument("'optimal' is not valid here");
        return optimal_radians;
    }
    if (text.size() > 3 && text.substr(text.size() - 3) == "deg") text.remove_suffix(3);
    const double degrees = parse_number(text);
    if (!std::isfinite(degrees)) throw std::invalid_argument("angle must be finite");
    return degrees * kDegree;
}

PolarizedMode parse_mode(std::string_view text) {
    if (text.size() < 2) throw std::invalid_argument("expected a mode like '3V', got '" + std::string(text) + "'");
    const char pol = text.back();
    if (pol != 'H' && pol != 'V') {
        throw std::invalid_argument("mode must end in H or V, got '" + std::string(text) + "'");
    }
    const int port = parse_int(text.substr(0, text.size() - 1));
    if (port < 0) throw std::invalid_argument("port must be non-negative");
    return {port, pol == 'H' ? Polarization::H : Polarization::V};
}

Complex parse_complex(std::string_view text) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) return {parse_number(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_number(parts[0]), parse_number(parts[1])};
    throw std::invalid_argument("expected 're' or 're,im', got '" + std::string(text) + "'");
}

CircuitFile parse_circuit(std::istream &in, const std::string &source) {
    std::optional<CircuitFile> file;
    std::string line;
    int line_no = 0;
    int last_line = 0;

    auto require_ports = [&]() -> CircuitFile & {
        if (!file) throw std::invalid_argument("'ports' must be declared before anything else");
        return *file;
    };
    auto check_port = [&](int port) {
        if (port < 0 || port >= require_ports().circuit.num_ports()) {
            throw std::invalid_argument("port " + std::to_string(port) + " is outside the circuit");
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (tokens.empty()) continue;
        last_line = line_no;

        try {
            const std::string &directive = tokens[0];
            if (directive == "ports") {
                if (file) throw std::invalid_argument("'ports' declared twice");
                if (tokens.size() != 2) throw std::invalid_argument("usage: ports <count>");
                const int ports = parse_int(tokens[1]);
                if (ports <= 0) throw std::invalid_argument("port count must be positive");
                file.emplace(CircuitFile{Circuit(ports), std::monostate{}, HeraldPattern(2 * ports), std::nullopt});
                continue;
            }

            Arguments args(tokens, 1);
            CircuitFile &f = require_ports();
            if (directive == "rotator") {
                const int port = parse_int(args.take("port"));
                const double angle = parse_rotator_angle(args.take("angle"));
                args.finish();
                f.circuit.add(Rotator{port, angle});
            } else if (directive == "pbs") {
                PolarizingBeamsplitter pbs;
                pbs.port_a = parse_int(args.take("a"));
                pbs.port_b = parse_int(args.take("b"));
                if (auto t = args.take_optional("through")) pbs.routing.through = parse_int(*t);
                if (auto r = args.take_optional("reflect")) pbs.routing.reflect = parse_int(*r);
                args.finish();
                f.circuit.add(pbs);
            } else if (directive == "bs") {
                Beamsplitter bs;
                bs.port_a = parse_int(args.take("a"));
                bs.port_b = parse_int(args.take("b"));
                bs.transmittance = parse_number(args.take("t"));
                args.finish();
                f.circuit.add(bs);
            } else if (directive == "phase") {
                const PolarizedMode mode = parse_mode(args.take("mode"));
                const double phase = parse_angle(args.take("angle"), std::numeric_limits<double>::quiet_NaN());
                args.finish();
                f.circuit.add(PhaseShift{mode, phase});
            } else if (directive == "input") {
                if (args.take_flag("logical")) {
                    if (!std::holds_alternative<std::monostate>(f.input)) throw std::invalid_argument("input declared twice");
                    LogicalInput li;
                    li.amplitudes.alpha = parse_complex(args.take("alpha"));
                    li.amplitudes.beta = parse_complex(args.take("beta"));
                    li.amplitudes.gamma = parse_complex(args.take("gamma"));
                    li.target = parse_mode(args.take("target"));
                    li.ancilla = parse_mode(args.take("ancilla"));
                    args.finish();
                    check_port(li.target.port);
                    check_port(li.ancilla.port);
                    if (li.target == li.ancilla) throw std::invalid_argument("target and ancilla must differ");
                    if (std::abs(li.amplitudes.norm_squared() - 1.0) > 1e-12) {
                        throw std::invalid_argument("logical amplitudes are not normalized");
                    }
                    f.input = li;
                } else if (args.take_flag("fock")) {
                    if (std::holds_alternative<LogicalInput>(f.input)) throw std::invalid_argument("input declared twice");
                    if (std::holds_alternative<std::monostate>(f.input)) f.input = ExplicitInput{};
                    std::vector<int> counts;
                    for (auto part : split(args.take("counts"), ',')) counts.push_back(parse_int(part));
                    if (counts.size() != static_cast<std::size_t>(f.circuit.num_modes())) {
                        throw std::invalid_argument("counts must list " + std::to_string(f.circuit.num_modes()) +
                                                    " modes");
                    }
                    const Complex amp = parse_complex(args.take("amp"));
                    args.finish();
                    auto &terms = std::get<ExplicitInput>(f.input).terms;
                    OccupationVector occ(std::move(counts));
                    for (const auto &t : terms) {
                        if (t.occupation == occ) throw std::invalid_argument("occupation listed twice");
                    }
                    terms.push_back(FockTerm{std::move(occ), amp});
                } else {
                    throw std::invalid_argument("input must be 'logical' or 'fock'");
                }
            } else if (directive == "output") {
                if (f.output) throw std::invalid_argument("output declared twice");
                const PolarizedMode mode = parse_mode(args.take("mode"));
                args.finish();
                check_port(mode.port);
                f.output = mode;
            } else if (directive == "herald") {
                const PolarizedMode mode = parse_mode(args.take("mode"));
                check_port(mode.port);
                DetectorConstraint c = Any{};
                int kinds = 0;
                if (auto k = args.take_optional("exactly")) c = Exactly{parse_int(*k)}, ++kinds;
                if (auto k = args.take_optional("atleast")) c = AtLeast{parse_int(*k)}, ++kinds;
                if (args.take_flag("any")) ++kinds;
                if (kinds != 1) throw std::invalid_argument("herald needs exactly one of exactly=<k>, atleast=<k>, any");
                args.finish();
                f.herald.require(mode, c);
            } else {
                throw std::invalid_argument("unknown directive '" + directive + "'");
            }
        } catch (const CircuitParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw CircuitParseError(source, line_no, e.what());
        }
    }

    if (!file) throw CircuitParseError(source, last_line, "missing 'ports' declaration");
    if (std::holds_alternative<std::monostate>(file->input)) {
        throw CircuitParseError(source, last_line, "missing 'input' declaration");
    }
    if (file->output && !std::holds_alternative<LogicalInput>(file->input)) {
        throw CircuitParseError(source, last_line, "'output' requires a logical input");
    }
    if (file->output && file->herald.is_measured(file->output->index())) {
        throw CircuitParseError(source, last_line, "the output mode must not be heralded");
    }
    return std::move(*file);
}

CircuitFile load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw CircuitParseError(path, 0, "cannot open file");
    return parse_circuit(in, path);
}

}  // namespace nlsgate::cli
