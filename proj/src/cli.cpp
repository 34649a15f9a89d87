// Copyright 2026 The spindomain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spindomain/cli.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "spindomain/dynamics.hpp"
#include "spindomain/entanglement.hpp"
#include "spindomain/io.hpp"
#include "spindomain/oracle.hpp"
#include "spindomain/steady_state.hpp"

namespace spindomain::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<int> parse_int(std::string_view text)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

int single_n_a(const RunConfig& config)
{
    const auto value = parse_int(config.n_a);
    if (!value) throw UsageError("--na expects an integer, got '" + config.n_a + "'");
    return *value;
}

IntRange n_a_range(const RunConfig& config)
{
    const auto range = parse_range(config.n_a);
    if (!range) throw UsageError("--na expects an integer or a range a..b, got '" + config.n_a + "'");
    return *range;
}

std::string format_or(const RunConfig& config, const std::string& fallback)
{
    const std::string f = config.format.empty() ? fallback : config.format;
    if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
    return f;
}

// Writes the payload to --out, or to `out` when no path is given.
void emit(const RunConfig& config, std::ostream& out, const std::string& payload)
{
    if (config.out.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + config.out + "'");
    file << payload;
}

BlockLayout checked_layout(int n_a, int n_b)
{
    try {
        return BlockLayout::for_sizes(n_a, n_b);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

// Wraps a subcommand body: usage errors map to exit code 2.
template <typename Body>
int guarded(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

std::string report_csv(const SteadyStateReport& r)
{
    std::ostringstream os;
    os << "n_a,n_b,jz_a,jz_b,negativity,entropy";
    for (std::size_t i = 0; i < r.weights.size(); ++i) os << ",P_" << i + 1;
    os << '\n'
       << r.rho_ss.n_a << ',' << r.rho_ss.n_b << ',' << format_double(r.jz_a) << ','
       << format_double(r.jz_b) << ',' << format_double(r.negativity) << ','
       << format_double(r.entropy);
    for (double w : r.weights) os << ',' << format_double(w);
    os << '\n';
    return os.str();
}

} // namespace

std::optional<IntRange> parse_range(std::string_view text)
{
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_int(text);
        if (!v) return std::nullopt;
        return IntRange{*v, *v};
    }
    const auto first = parse_int(text.substr(0, dots));
    const auto last = parse_int(text.substr(dots + 2));
    if (!first || !last || *first > *last) return std::nullopt;
    return IntRange{*first, *last};
}

std::vector<CheckResult> oracle_checks(int n_a, int n_b, double tol)
{
    const BlockLayout layout = BlockLayout::for_sizes(n_a, n_b);
    const Liouvillian l = build_liouvillian(n_a, n_b, 1.0, 0.0);
    const DensityMatrix product = anti_parallel_product_state(n_a, n_b);
    const DensityMatrix reduced0 = initial_state(layout);

    std::vector<CheckResult> checks;
    auto record = [&](std::string name, double residual) {
        checks.push_back({std::move(name), n_a, n_b, residual, tol, residual <= tol});
    };

    record("initial_state",
           (from_tensor_product(product).data - reduced0.data).cwiseAbs().maxCoeff());

    const std::vector<double> probe_times{0.1, 0.5, 1.0, 5.0};
    EvolutionParams params;
    params.t_end = probe_times.back();
    params.step = EvolutionParams::default_step(n_a);
    params.sample_every = static_cast<int>(std::lround(0.1 / params.step));
    const Trajectory reduced = integrate(reduced0, params);
    const Trajectory oracle = evolve_oracle(l, product, probe_times);
    for (std::size_t k = 0; k < probe_times.size(); ++k) {
        const DensityMatrix mapped = to_tensor_product(reduced.at_time(probe_times[k]));
        const double residual = (mapped.data - oracle.states()[k].data).norm();
        char name[48];
        std::snprintf(name, sizeof name, "oracle_equivalence_t=%g", probe_times[k]);
        record(name, residual);
    }

    const DensityMatrix oracle_ss = from_tensor_product(steady_state_oracle(l, product));
    record("steady_state",
           (oracle_ss.data - steady_state(layout).rho_ss.data).cwiseAbs().maxCoeff());
    return checks;
}

CheckResult conjecture_check(int n_a, int n_b, double tol)
{
    const BlockLayout layout = BlockLayout::for_sizes(n_a, n_b);
    const Liouvillian l = build_liouvillian(n_a, n_b, 1.0, 0.0);
    const DensityMatrix oracle_ss =
        from_tensor_product(steady_state_oracle(l, anti_parallel_product_state(n_a, n_b)));
    const double residual =
        (oracle_ss.data - steady_state(layout).rho_ss.data).cwiseAbs().maxCoeff();
    return {"conjecture", n_a, n_b, residual, tol, residual <= tol};
}

int cmd_evolve(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const int n_a = single_n_a(config);
        const int n_b = config.n_b.value_or(1);
        const BlockLayout layout = checked_layout(n_a, n_b);
        const std::string format = format_or(config, "csv");

        std::vector<ElementLabel> elements;
        if (config.elements.empty()) {
            for (Index k = 0; k < layout.dim(); ++k) {
                elements.push_back({k, k, "rho_" + std::to_string(k + 1) + "_" +
                                              std::to_string(k + 1)});
            }
        }
        for (const auto& text : config.elements) {
            const auto label = parse_element_label(text, layout.dim());
            if (!label) {
                err << "error: invalid element label: " << text << '\n';
                return kExitUsage;
            }
            elements.push_back(*label);
        }

        EvolutionParams params;
        params.gamma = config.gamma;
        params.t_end = config.t_end.value_or(5.0);
        params.step = config.step.value_or(EvolutionParams::default_step(n_a));
        params.sample_every = config.sample_every.value_or(
            std::max(1, static_cast<int>(std::lround(0.01 / params.step))));
        if (params.t_end < 0.0) throw UsageError("--t-end must be non-negative");
        if (!(params.gamma > 0.0)) throw UsageError("--gamma must be positive");

        const DensityMatrix rho0 = initial_state(layout);
        Trajectory traj;
        if (params.t_end == 0.0) {
            traj.append(0.0, rho0);
        } else {
            params.validate();
            traj = integrate(rho0, params);
        }

        std::ostringstream os;
        if (format == "csv") {
            write_trajectory_csv(os, traj, elements, config.with_imag);
        } else {
            nlohmann::json j;
            j["t_tilde"] = traj.times();
            for (const auto& e : elements) {
                std::vector<double> re, im;
                for (const auto& s : traj.states()) {
                    re.push_back(s.data(e.row, e.col).real());
                    im.push_back(s.data(e.row, e.col).imag());
                }
                j["elements"][e.text] = {{"re", re}, {"im", im}};
            }
            os << j.dump(2) << '\n';
        }
        emit(config, out, os.str());
        return kExitOk;
    });
}

int cmd_steady(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const int n_a = single_n_a(config);
        const int n_b = config.n_b.value_or(1);
        const BlockLayout layout = checked_layout(n_a, n_b);
        const std::string format = format_or(config, "json");

        SteadyStateReport report;
        if (config.numeric) {
            const double step = config.step.value_or(EvolutionParams::default_step(n_a));
            report = analyze_state(relax_to_stationary(initial_state(layout), step));
        } else {
            report = steady_state(layout);
        }
        emit(config, out, format == "json" ? to_json(report).dump(2) + "\n" : report_csv(report));
        return kExitOk;
    });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const IntRange range = n_a_range(config);
        const int n_b = config.n_b.value_or(1);
        const std::string format = format_or(config, "csv");
        for (int n_a : {range.first, range.last}) (void)checked_layout(n_a, n_b);

        // Rows are independent; collect them in input order.
        std::vector<std::future<SteadyStateReport>> rows;
        for (int n_a = range.first; n_a <= range.last; ++n_a) {
            rows.push_back(std::async(std::launch::async, [n_a, n_b] {
                return steady_state(BlockLayout::for_sizes(n_a, n_b));
            }));
        }

        std::ostringstream os;
        nlohmann::json table = nlohmann::json::array();
        if (format == "csv") os << "n_a,jz_a,jz_b,negativity,entropy\n";
        for (auto& row : rows) {
            const SteadyStateReport r = row.get();
            if (format == "csv") {
                os << r.rho_ss.n_a << ',' << format_double(r.jz_a) << ',' << format_double(r.jz_b)
                   << ',' << format_double(r.negativity) << ',' << format_double(r.entropy)
                   << '\n';
            } else {
                table.push_back({{"n_a", r.rho_ss.n_a},
                                 {"jz_a", r.jz_a},
                                 {"jz_b", r.jz_b},
                                 {"negativity", r.negativity},
                                 {"entropy", r.entropy}});
            }
        }
        if (format == "json") os << table.dump(2) << '\n';
        emit(config, out, os.str());
        return kExitOk;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        std::vector<CheckResult> checks;
        if (config.conjecture) {
            if (!config.n_b) throw UsageError("verify --conjecture needs --nb");
            const IntRange range = n_a_range(config);
            const double tol = config.tol.value_or(1e-6);
            for (int n_a = range.first; n_a <= range.last; ++n_a) {
                (void)checked_layout(n_a, *config.n_b);
                checks.push_back(conjecture_check(n_a, *config.n_b, tol));
            }
        } else {
            const double tol = config.tol.value_or(1e-8);
            std::vector<std::pair<int, int>> pairs;
            if (config.n_a_given) {
                const IntRange range = n_a_range(config);
                for (int n_a = range.first; n_a <= range.last; ++n_a) {
                    pairs.emplace_back(n_a, config.n_b.value_or(1));
                }
            } else {
                pairs = {{3, 1}, {4, 2}};
            }
            for (const auto& [n_a, n_b] : pairs) {
                (void)checked_layout(n_a, n_b);
                for (auto& c : oracle_checks(n_a, n_b, tol)) checks.push_back(std::move(c));
            }
        }

        bool all_passed = true;
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : checks) {
            all_passed = all_passed && c.passed;
            list.push_back({{"name", c.name},
                            {"n_a", c.n_a},
                            {"n_b", c.n_b},
                            {"residual", c.residual},
                            {"tolerance", c.tolerance},
                            {"verdict", c.passed ? "pass" : "fail"}});
        }
        const nlohmann::json report{{"checks", list}, {"passed", all_passed}};
        emit(config, out, report.dump(2) + "\n");
        return all_passed ? kExitOk : kExitVerifyFailed;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Relaxation of two collective spin domains coupled to a common reservoir",
                 "spindomain"};
    app.require_subcommand(1);

    RunConfig config;
    auto add_common = [&config](CLI::App* sub) {
        sub->add_option("--na", config.n_a, "spins in domain A (integer or a..b)");
        sub->add_option("--nb", config.n_b, "spins in domain B");
        sub->add_option("--out", config.out, "output path (default: stdout)");
        sub->add_option("--format", config.format, "csv or json");
    };

    auto* evolve = app.add_subcommand("evolve", "integrate the reduced equations of motion");
    add_common(evolve);
    evolve->add_option("--gamma", config.gamma, "damping rate (t_tilde = gamma t)");
    evolve->add_option("--t-end", config.t_end, "final dimensionless time (default 5)");
    evolve->add_option("--step", config.step, "RK4 step in t_tilde");
    evolve->add_option("--sample-every", config.sample_every, "output decimation");
    evolve->add_option("--elements", config.elements, "labels rho_<i>_<j>, 1-based")
        ->delimiter(',');
    evolve->add_flag("--with-imag", config.with_imag, "add imaginary-part columns");

    auto* steady = app.add_subcommand("steady", "steady-state report");
    add_common(steady);
    steady->add_option("--gamma", config.gamma, "damping rate");
    steady->add_option("--step", config.step, "RK4 step for --numeric");
    steady->add_flag("--numeric", config.numeric, "relax by long-time integration");

    auto* sweep = app.add_subcommand("sweep", "steady-state observables over a range of n_a");
    add_common(sweep);

    auto* verify = app.add_subcommand("verify", "compare against the Liouvillian oracle");
    add_common(verify);
    verify->add_flag("--conjecture", config.conjecture, "check block-bottom steady states");
    verify->add_option("--tol", config.tol, "override every tolerance");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (const auto* sub : app.get_subcommands()) {
        config.subcommand = sub->get_name();
        config.n_a_given = sub->count("--na") > 0;
    }
    if (config.subcommand == "evolve") return cmd_evolve(config, out, err);
    if (config.subcommand == "steady") return cmd_steady(config, out, err);
    if (config.subcommand == "sweep") return cmd_sweep(config, out, err);
    return cmd_verify(config, out, err);
}

} // namespace spindomain::cli
