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

#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "cli/circuit_file.hpp"
#include "nlsgate/evolution.hpp"
#include "nlsgate/heralding.hpp"

namespace nlsgate::cli {

namespace {

Json candidate_json(const Candidate &c) {
    return Json{
        {"sigma", angle_json(c.params.sigma)},
        {"theta", angle_json(c.params.theta)},
        {"residual", report_number(c.residual)},
        {"success_probability", report_number(c.success)},
        {"converged", c.converged},
        {"iterations", c.iterations},
    };
}

Json range_json(const AngleRange &r) {
    return Json{{"min_degrees", report_number(r.lo / kDegree)}, {"max_degrees", report_number(r.hi / kDegree)}};
}

Json mode_list(const std::vector<std::size_t> &modes) {
    Json out = Json::array();
    for (std::size_t m : modes) out.push_back(to_string(PolarizedMode::from_index(m)));
    return out;
}

Json counts_json(const OccupationVector &occ) {
    Json out = Json::array();
    for (int c : occ.counts()) out.push_back(c);
    return out;
}

// Amplitudes below this are numerical zeros and are left out of listings.
constexpr double kListingFloor = 1e-14;

Json branch_json(const HeraldBranch &b) {
    Json amps = Json::array();
    const FockBasis &basis = b.state.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (std::abs(b.state[k]) <= kListingFloor) continue;
        Json entry = complex_json(b.state[k]);
        entry["occupation"] = counts_json(basis.state(k));
        amps.push_back(std::move(entry));
    }
    return Json{{"outcome", counts_json(b.outcome)}, {"probability", report_number(b.probability)}, {"amplitudes", amps}};
}

std::vector<Sector> input_sectors(const CircuitFile &file) {
    const int ports = file.circuit.num_ports();
    if (const auto *li = std::get_if<LogicalInput>(&file.input)) {
        return embed_logical(li->amplitudes, li->target, li->ancilla, ports);
    }
    const auto &terms = std::get<ExplicitInput>(file.input).terms;
    std::map<int, std::vector<const FockTerm *>> by_total;
    for (const auto &t : terms) by_total[t.occupation.total()].push_back(&t);
    std::vector<Sector> sectors;
    for (const auto &[total, group] : by_total) {
        auto basis = enumerate_basis(file.circuit.num_modes(), total);
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
        for (const FockTerm *t : group) amps[static_cast<Eigen::Index>(basis->index_of(t->occupation))] = t->amplitude;
        sectors.push_back(Sector{total, 1.0, StateVector(basis, std::move(amps))});
    }
    return sectors;
}

// Gate response of a logical circuit: output-mode amplitude for each unit
// logical input, all other kept modes empty.
std::optional<GateReport> logical_response(const CircuitFile &file, const ModeUnitary &u) {
    const auto *li = std::get_if<LogicalInput>(&file.input);
    if (li == nullptr || !file.output || !file.herald.exactly_only()) return std::nullopt;
    const auto &kept = file.herald.kept_modes();
    const auto out_pos = static_cast<std::size_t>(
        std::find(kept.begin(), kept.end(), file.output->index()) - kept.begin());

    std::array<Complex, 3> c{};
    for (int level = 0; level < 3; ++level) {
        LogicalAmplitudes unit;
        (level == 0 ? unit.alpha : level == 1 ? unit.beta : unit.gamma) = 1.0;
        const auto sectors = embed_logical(unit, li->target, li->ancilla, file.circuit.num_ports());
        const auto &sector = sectors[static_cast<std::size_t>(level)];
        const ConditionalState cs = condition(nlsgate::apply(u, sector.state), file.herald);
        if (cs.branches.empty()) continue;
        std::vector<int> counts(kept.size(), 0);
        counts[out_pos] = level;
        c[static_cast<std::size_t>(level)] = cs.state().amplitude(OccupationVector(counts));
    }
    GateReport r;
    r.coefficients = GateCoefficients{c[0], c[1], c[2]};
    r.success_probability = std::norm(c[0]);
    r.mean_success_probability = (std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2])) / 3.0;
    r.residual = nls_residual(r.coefficients);
    r.method = Method::Simulated;
    return r;
}

Json base_report(const std::string &command) {
    return Json{{"command", command}, {"version", tool_version()}, {"comparison", comparison_json()}};
}

}  // namespace

CommandResult cmd_verify(const VerifyOptions &opts) {
    const OptimalPoint opt = optimal_params();
    const NlsParams p{parse_angle(opts.sigma, opt.sigma_star), parse_angle(opts.theta, opt.theta_star)};
    const GateReport closed = closed_form_report(p);
    const GateReport simulated = simulate_nls(p);
    const double deviation = closed.coefficients.max_deviation(simulated.coefficients);

    CommandResult result;
    result.exit_code = deviation <= kVerifyTolerance ? kExitOk : kExitCheckFailed;
    Json &r = result.report = base_report("verify");
    r["parameters"] = Json{
        {"sigma", angle_json(p.sigma)},
        {"theta", angle_json(p.theta)},
        {"sigma_input", opts.sigma},
        {"theta_input", opts.theta},
    };
    r["closed_form"] = gate_report_json(closed);
    r["simulated"] = gate_report_json(simulated);
    r["coefficients"] = coefficients_json(simulated.coefficients);
    r["success_probability"] = report_number(simulated.success_probability);
    r["residual"] = report_number(simulated.residual);
    r["max_deviation"] = report_number(deviation);
    r["tolerance"] = kVerifyTolerance;
    r["agrees"] = deviation <= kVerifyTolerance;
    return result;
}

CommandResult cmd_optimize(const OptimizeOptions &opts) {
    opts.config.validate();
    const auto start = std::chrono::steady_clock::now();
    const SearchResult found = optimize(opts.config);
    const OptimalPoint opt = optimal_params();

    CommandResult result;
    Json &r = result.report = base_report("optimize");
    const SearchConfig &cfg = opts.config;
    r["config"] = Json{
        {"sigma_range", range_json(cfg.sigma)},
        {"theta_range", range_json(cfg.theta)},
        {"grid_step_degrees", report_number(cfg.grid_step / kDegree)},
        {"refine_tolerance", cfg.refine_tolerance},
        {"max_iterations", cfg.max_iterations},
        {"penalty_weight", cfg.penalty_weight},
        {"certify_step_degrees", report_number(opts.certify_step / kDegree)},
    };
    r["best"] = candidate_json(found.best);
    r["best"]["coefficients"] = coefficients_json(closed_form_coefficients(found.best.params));
    r["success_probability"] = report_number(found.best.success);
    r["residual"] = report_number(found.best.residual);
    r["converged"] = found.converged;
    r["sweep"] = Json{{"grid_points", found.grid_points}, {"local_minima", found.refined.size()}};
    Json refined = Json::array();
    for (const auto &c : found.refined) refined.push_back(candidate_json(c));
    r["refined"] = refined;
    r["closed_form_optimum"] = Json{
        {"a", report_number(opt.a)},
        {"sigma", angle_json(opt.sigma_star)},
        {"theta", angle_json(opt.theta_star)},
        {"success_probability", report_number(opt.success)},
    };
    r["deviation_from_closed_form"] = Json{
        {"sigma_radians", report_number(std::abs(found.best.params.sigma - opt.sigma_star))},
        {"theta_radians", report_number(std::abs(found.best.params.theta - opt.theta_star))},
        {"success_probability", report_number(std::abs(found.best.success - opt.success))},
    };

    bool certificate_ok = true;
    if (opts.certify_step > 0.0) {
        SearchConfig fine = cfg;
        fine.grid_step = opts.certify_step;
        const Certificate cert = certify(fine, opt.success + 1e-9);
        certificate_ok = cert.holds;
        r["certificate"] = Json{
            {"grid_step_degrees", report_number(cert.grid_step / kDegree)},
            {"residual_threshold", cert.residual_threshold},
            {"success_bound", report_number(cert.success_bound)},
            {"local_minima", cert.local_minima},
            {"zero_residual_points", cert.zero_residual_points},
            {"max_success_probability", report_number(cert.max_success)},
            {"argmax_sigma", angle_json(cert.argmax.sigma)},
            {"argmax_theta", angle_json(cert.argmax.theta)},
            {"holds", cert.holds},
            {"below_klm_value", cert.max_success < kKlmSuccessProbability},
        };
    }
    if (opts.timing) {
        r["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    result.exit_code = !found.converged ? kExitUnconverged : (certificate_ok ? kExitOk : kExitCheckFailed);
    return result;
}

CommandResult cmd_simulate(const std::string &path) {
    const CircuitFile file = load_circuit(path);
    const ModeUnitary u = compose(file.circuit);

    CommandResult result;
    Json &r = result.report = base_report("simulate");
    Json elements = Json::array();
    for (const auto &e : file.circuit.elements()) elements.push_back(describe(e));
    r["circuit"] = Json{{"file", path}, {"ports", file.circuit.num_ports()}, {"elements", elements}};
    r["kept_modes"] = mode_list(file.herald.kept_modes());
    r["measured_modes"] = mode_list(file.herald.measured_modes());
    Json herald = Json::object();
    for (std::size_t m : file.herald.measured_modes()) {
        herald[to_string(PolarizedMode::from_index(m))] = to_string(file.herald.constraint(m));
    }
    r["herald"] = herald;

    const bool logical = std::holds_alternative<LogicalInput>(file.input);
    const std::vector<Sector> sectors = input_sectors(file);
    double probability = 0.0;
    bool mixture = false;
    Json sector_reports = Json::array();
    for (const auto &s : sectors) {
        const ConditionalState cs = condition(nlsgate::apply(u, s.state), file.herald);
        probability += cs.probability;
        mixture = mixture || cs.is_mixture();
        Json branches = Json::array();
        for (const auto &b : cs.branches) branches.push_back(branch_json(b));
        Json sr{
            {"photons", s.state.basis().total_photons()},
            {"input_norm_squared", report_number(s.state.norm_squared())},
            {"probability", report_number(cs.probability)},
            {"mixture", cs.is_mixture()},
            {"branches", branches},
        };
        if (logical) {
            sr["logical_level"] = s.logical_level;
            sr["logical_amplitude"] = complex_json(s.logical_amplitude);
        }
        sector_reports.push_back(std::move(sr));
    }
    r["sectors"] = sector_reports;
    r["success_probability"] = report_number(probability);
    r["incoherent_mixture"] = mixture;
    if (const auto gate = logical_response(file, u)) {
        r["output_mode"] = to_string(*file.output);
        r["gate"] = gate_report_json(*gate);
        r["coefficients"] = coefficients_json(gate->coefficients);
        r["residual"] = report_number(gate->residual);
    }
    return result;
}

namespace {

double parse_degrees_flag(const std::string &text) {
    return parse_angle(text, std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulator and verifier for the single-ancilla linear-optical sign gate"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Compare closed-form and simulated gate coefficients");
    verify_cmd->add_option("--sigma", verify.sigma, "Input rotator angle in degrees, or 'optimal'");
    verify_cmd->add_option("--theta", verify.theta, "Through-arm rotator angle in degrees, or 'optimal'");

    OptimizeOptions optimize_opts;
    std::string sigma_min = "0", sigma_max = "180", theta_min = "0", theta_max = "90";
    std::string grid_step = "1", certify_step = "0.25";
    auto *optimize_cmd = app.add_subcommand("optimize", "Rediscover the optimal angles by grid sweep and simplex refinement");
    optimize_cmd->add_option("--sigma-min", sigma_min, "Degrees")->capture_default_str();
    optimize_cmd->add_option("--sigma-max", sigma_max, "Degrees")->capture_default_str();
    optimize_cmd->add_option("--theta-min", theta_min, "Degrees")->capture_default_str();
    optimize_cmd->add_option("--theta-max", theta_max, "Degrees")->capture_default_str();
    optimize_cmd->add_option("--grid-step", grid_step, "Sweep grid step in degrees")->capture_default_str();
    optimize_cmd->add_option("--tolerance", optimize_opts.config.refine_tolerance, "Residual counted as converged")
        ->capture_default_str();
    optimize_cmd->add_option("--max-iterations", optimize_opts.config.max_iterations, "Simplex budget per candidate")
        ->capture_default_str();
    optimize_cmd->add_option("--penalty", optimize_opts.config.penalty_weight, "Success weight in the sweep objective")
        ->capture_default_str();
    optimize_cmd->add_option("--certify-step", certify_step, "Certificate grid step in degrees, 0 to skip")
        ->capture_default_str();
    optimize_cmd->add_flag("--timing", optimize_opts.timing, "Include wall time (output no longer reproducible)");

    std::string circuit_path;
    auto *simulate_cmd = app.add_subcommand("simulate", "Simulate a circuit-description file");
    simulate_cmd->add_option("file", circuit_path, "Circuit file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CommandResult result;
        if (*verify_cmd) {
            result = cmd_verify(verify);
        } else if (*optimize_cmd) {
            auto &cfg = optimize_opts.config;
            cfg.sigma = {parse_degrees_flag(sigma_min), parse_degrees_flag(sigma_max)};
            cfg.theta = {parse_degrees_flag(theta_min), parse_degrees_flag(theta_max)};
            cfg.grid_step = parse_degrees_flag(grid_step);
            optimize_opts.certify_step = parse_degrees_flag(certify_step);
            if (optimize_opts.certify_step < 0) throw std::invalid_argument("certify step must be non-negative");
            result = cmd_optimize(optimize_opts);
        } else {
            result = cmd_simulate(circuit_path);
        }
        out << render(result.report);
        return result.exit_code;
    } catch (const CircuitParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace nlsgate::cli
