// Command-line runner: scenario configs in, CSV/matrix artifacts plus a run
// manifest out. Units everywhere: Gamma' = 1, z_a = 1.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgqed/band_edge.hpp"
#include "wgqed/bound_states.hpp"
#include "wgqed/chain.hpp"
#include "wgqed/config.hpp"
#include "wgqed/dynamics.hpp"
#include "wgqed/effective.hpp"
#include "wgqed/hamiltonian.hpp"
#include "wgqed/io.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/polariton.hpp"
#include "wgqed/potential.hpp"
#include "wgqed/sweep.hpp"
#include "wgqed/transfer_matrix.hpp"

namespace {

using namespace wgqed;
namespace fs = std::filesystem;

struct CommonArgs {
    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    int workers = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "path to a scenario config (JSON)");
    cmd->add_option("--preset", args.preset_name, "bundled preset name");
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--workers", args.workers, "sweep worker threads")
        ->check(CLI::PositiveNumber);
}

ScenarioConfig resolve_config(const CommonArgs& args) {
    ScenarioConfig cfg;
    if (!args.preset_name.empty() && !args.config_path.empty())
        throw ConfigError({"--config and --preset are mutually exclusive"});
    if (!args.preset_name.empty())
        cfg = preset(args.preset_name);
    else if (!args.config_path.empty())
        cfg = load_config(args.config_path);
    else
        throw ConfigError({"one of --config or --preset is required"});
    // env override applies to the output directory only
    if (const char* env = std::getenv("WGQED_OUT_DIR"); env && *env)
        cfg.output_dir = env;
    if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
    return cfg;
}

struct RunTimer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void finish(const ScenarioConfig& cfg, const std::string& subcommand,
            const RunTimer& timer) {
    write_manifest((fs::path(cfg.output_dir) / "manifest.json").string(),
                   serialize_config(cfg), subcommand, timer.seconds());
}

// Steady-state intensities at a single parameter point.
std::vector<double> intensities(const ScenarioConfig& cfg) {
    const AtomChain chain = cfg.make_chain();
    const HamiltonianBlocks blocks = assemble_blocks(chain, cfg.levels, cfg.potential);
    SteadyStateOptions opts;
    opts.tolerance = cfg.solver.tolerance;
    const FewExcitationState st = steady_state(blocks, cfg.drive, opts);
    const ObservableSet obs = observables(chain, cfg.levels, st, cfg.drive.amplitude);
    return {obs.i1, obs.i2};
}

int cmd_transmission_sweep(const CommonArgs& args) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    const SweepResult result = run_sweep(cfg, {"i1", "i2"}, intensities, args.workers);
    write_text_file((fs::path(cfg.output_dir) / "transmission.csv").string(),
                    sweep_to_csv(result));
    finish(cfg, "transmission-sweep", timer);
    return 0;
}

int cmd_ss_map(const CommonArgs& args) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    const AtomChain chain = cfg.make_chain();
    const HamiltonianBlocks blocks = assemble_blocks(chain, cfg.levels, cfg.potential);
    SteadyStateOptions opts;
    opts.tolerance = cfg.solver.tolerance;
    const FewExcitationState st = steady_state(blocks, cfg.drive, opts);
    const ObservableSet obs = observables(chain, cfg.levels, st, cfg.drive.amplitude);
    write_text_file((fs::path(cfg.output_dir) / "ss_map.txt").string(),
                    matrix_to_text(obs.ss_map));
    std::ostringstream summary;
    summary << "i1,i2,mean_separation\n"
            << format_double(obs.i1) << ',' << format_double(obs.i2) << ','
            << format_double(obs.mean_separation) << '\n';
    write_text_file((fs::path(cfg.output_dir) / "summary.csv").string(), summary.str());
    finish(cfg, "ss-map", timer);
    return 0;
}

// Two-photon spin-wave initial state from the configured bound-state profile.
FewExcitationState spin_wave_state(const ScenarioConfig& cfg, const AtomChain& chain) {
    if (!cfg.spin_wave.enabled)
        throw ConfigError({"spin_wave.enabled must be true for this subcommand"});
    const PolaritonParams pp = polariton_params(cfg.levels, cfg.density);
    BoundStateOptions opts;
    opts.grid_points = cfg.solver.grid_points;
    opts.r_max = cfg.solver.r_max;
    const auto states =
        bound_states(cfg.potential, pp, cfg.spin_wave.rel_state + 1, opts);
    if (static_cast<int>(states.size()) <= cfg.spin_wave.rel_state)
        throw std::runtime_error("spin_wave: requested bound state not found");
    const BoundState& bs = states[static_cast<std::size_t>(cfg.spin_wave.rel_state)];

    const double offset = cfg.spin_wave.rel_offset;
    const double h = bs.grid[1] - bs.grid[0];
    auto rel = [&, offset, h](double r) -> Complex {
        const double x = std::abs(r) - offset;
        if (x < 0.0 || x >= bs.grid.back()) return 0.0;
        const auto i = static_cast<Eigen::Index>(x / h);
        if (i + 1 >= bs.wavefunction.size()) return 0.0;
        const double frac = x / h - static_cast<double>(i);
        return (1.0 - frac) * bs.wavefunction(i) + frac * bs.wavefunction(i + 1);
    };
    const double rc = cfg.spin_wave.cm_center, rw = cfg.spin_wave.cm_width;
    auto cm = [rc, rw](double z) -> Complex {
        const double x = (z - rc) / rw;
        return std::exp(-2.0 * x * x);
    };
    return prepare_spin_wave(chain, cm, rel);
}

int cmd_propagate(const CommonArgs& args) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    const AtomChain chain = cfg.make_chain();
    const HamiltonianBlocks blocks = assemble_blocks(chain, cfg.levels, cfg.potential);

    FewExcitationState initial;
    if (cfg.spin_wave.enabled)
        initial = spin_wave_state(cfg, chain);
    else
        initial = FewExcitationState::zero(blocks.n);

    std::ostringstream out;
    out << "t,norm2_one,norm2_two,mean_separation,i1,i2\n";
    EvolveOptions opts;
    opts.dt = cfg.solver.dt;
    opts.t_max = cfg.solver.t_max;
    opts.store_every = cfg.solver.store_every;
    opts.keep_states = false;
    opts.observer = [&](double t, const FewExcitationState& st) {
        const Complex amp = cfg.drive.at(t);
        const ObservableSet obs = observables(chain, cfg.levels, st, amp);
        out << format_double(t) << ',' << format_double(st.excited_norm2()) << ','
            << format_double(st.manifold2_norm2()) << ','
            << format_double(obs.mean_separation) << ',' << format_double(obs.i1) << ','
            << format_double(obs.i2) << '\n';
    };
    evolve(blocks, cfg.drive, initial, opts);
    write_text_file((fs::path(cfg.output_dir) / "trajectory.csv").string(), out.str());
    finish(cfg, "propagate", timer);
    return 0;
}

int cmd_g2(const CommonArgs& args) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    if (cfg.solver.tau_grid.empty())
        throw ConfigError({"solver.tau_grid must be set for g2 runs"});
    const AtomChain chain = cfg.make_chain();
    const HamiltonianBlocks blocks = assemble_blocks(chain, cfg.levels, cfg.potential);
    const std::vector<double> values =
        g2(chain, cfg.levels, blocks, cfg.drive, cfg.solver.tau_grid);
    std::ostringstream out;
    out << "tau,g2\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out << format_double(cfg.solver.tau_grid[i]) << ',' << format_double(values[i])
            << '\n';
    write_text_file((fs::path(cfg.output_dir) / "g2.csv").string(), out.str());
    finish(cfg, "g2", timer);
    return 0;
}

int cmd_bound_states(const CommonArgs& args, int count) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    const PolaritonParams pp = polariton_params(cfg.levels, cfg.density);
    BoundStateOptions opts;
    opts.grid_points = cfg.solver.grid_points;
    opts.r_max = cfg.solver.r_max;
    const auto states = bound_states(cfg.potential, pp, count, opts);

    std::ostringstream table;
    table << "index,energy_re,energy_im,mean_separation\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
        table << i << ',' << format_complex_pair(states[i].energy) << ','
              << format_double(states[i].mean_separation) << '\n';
        write_text_file(
            (fs::path(cfg.output_dir) / ("bound_state_" + std::to_string(i) + ".csv"))
                .string(),
            complex_table(states[i].grid, states[i].wavefunction));
    }
    write_text_file((fs::path(cfg.output_dir) / "bound_states.csv").string(),
                    table.str());
    finish(cfg, "bound-states", timer);
    return 0;
}

int cmd_effective_propagate(const CommonArgs& args) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    const PolaritonParams pp = polariton_params(cfg.levels, cfg.density);

    TwoBodyGrid grid;
    grid.n_R = cfg.solver.n_R;
    grid.n_r = cfg.solver.grid_points;
    grid.R_length =
        cfg.solver.R_length > 0.0 ? cfg.solver.R_length : cfg.chain.count * 4.0;
    grid.r_max = cfg.solver.r_max;
    if (grid.r_max <= 0.0) grid.r_max = cfg.chain.count * cfg.chain.spacing;

    BoundStateOptions bopts;
    bopts.grid_points = cfg.solver.grid_points;
    bopts.r_max = grid.r_max;
    const auto states =
        bound_states(cfg.potential, pp, cfg.spin_wave.rel_state + 1, bopts);
    if (static_cast<int>(states.size()) <= cfg.spin_wave.rel_state)
        throw std::runtime_error("effective-propagate: bound state not found");
    const BoundState& bs = states[static_cast<std::size_t>(cfg.spin_wave.rel_state)];
    const double h = bs.grid[1] - bs.grid[0];

    MatrixXc psi0(grid.n_R, grid.n_r);
    for (int i = 0; i < grid.n_R; ++i) {
        const double xr = (grid.R(i) - cfg.spin_wave.cm_center) / cfg.spin_wave.cm_width;
        const Complex cm = std::exp(-2.0 * xr * xr);
        for (int k = 0; k < grid.n_r; ++k) {
            const double x = std::abs(grid.r(k)) - cfg.spin_wave.rel_offset;
            Complex rel = 0.0;
            if (x >= 0.0 && x < bs.grid.back()) {
                const auto j = static_cast<Eigen::Index>(x / h);
                if (j + 1 < bs.wavefunction.size()) {
                    const double frac = x / h - static_cast<double>(j);
                    rel = (1.0 - frac) * bs.wavefunction(j) +
                          frac * bs.wavefunction(j + 1);
                }
            }
            psi0(i, k) = cm * rel;
        }
    }

    std::vector<double> t_grid;
    const int samples = 60;
    for (int i = 0; i <= samples; ++i)
        t_grid.push_back(cfg.solver.t_max * i / static_cast<double>(samples));
    EffectiveOptions eopts;
    eopts.dt = cfg.solver.dt;
    const TwoBodyTrajectory traj =
        propagate_effective(cfg.potential, pp, grid, psi0, t_grid, eopts);

    std::ostringstream out;
    out << "t,norm2,mean_separation\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        out << format_double(traj.times[i]) << ',' << format_double(traj.norm2[i]) << ','
            << format_double(traj.mean_separation[i]) << '\n';
    write_text_file((fs::path(cfg.output_dir) / "effective_trajectory.csv").string(),
                    out.str());
    finish(cfg, "effective-propagate", timer);
    return 0;
}

int cmd_design_budget(const CommonArgs& args, double c_lambda, double beta,
                      double gamma_1d, double gamma_prime) {
    RunTimer timer;
    ScenarioConfig cfg;
    bool have_cfg = false;
    try {
        cfg = resolve_config(args);
        have_cfg = true;
    } catch (const ConfigError&) {
        // flags-only invocation is fine for this subcommand
        if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
        if (const char* env = std::getenv("WGQED_OUT_DIR"); env && *env)
            cfg.output_dir = env;
    }
    if (have_cfg) {
        c_lambda = cfg.design.c_lambda;
        beta = cfg.design.beta;
    }
    const DesignBudget budget = design_budget(c_lambda, beta, gamma_1d, gamma_prime);
    nlohmann::json out = {{"z0_opt", budget.z0_opt},
                          {"total_loss", budget.total_loss},
                          {"pulse_optical_depth", budget.pulse_optical_depth},
                          {"total_optical_depth", budget.total_optical_depth}};
    std::cout << out.dump(2) << std::endl;
    write_text_file((fs::path(cfg.output_dir) / "design_budget.json").string(),
                    out.dump(2) + "\n");
    finish(cfg, "design-budget", timer);
    return 0;
}

// Transfer-matrix reference sweep over the configured axes.
int cmd_oracle(const CommonArgs& args) {
    RunTimer timer;
    ScenarioConfig cfg = resolve_config(args);
    auto evaluate = [](const ScenarioConfig& point) -> std::vector<double> {
        const ScattererCoefficients coeffs =
            std::abs(point.levels.rabi_control) > 0.0
                ? three_level_coefficients(point.levels.gamma_1d,
                                           point.levels.gamma_prime,
                                           std::abs(point.levels.rabi_control),
                                           point.levels.two_photon_detuning)
                : two_level_coefficients(point.levels.gamma_1d, point.levels.gamma_prime,
                                         point.levels.probe_detuning);
        const Complex t = chain_transmission(
            coeffs, static_cast<std::size_t>(point.chain.count), point.chain.phase);
        return {std::norm(t)};
    };
    const SweepResult result = run_sweep(cfg, {"t2"}, evaluate, args.workers);
    write_text_file((fs::path(cfg.output_dir) / "oracle.csv").string(),
                    sweep_to_csv(result));
    finish(cfg, "oracle", timer);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain-EIT photon interaction simulator"};
    app.require_subcommand(1);

    CommonArgs args;
    int bound_count = 2;
    double c_lambda = 2e4, beta = 10.0, gamma_1d = 1.0, gamma_prime = 1.0;

    auto* sweep_cmd = app.add_subcommand("transmission-sweep",
                                         "steady-state I1/I2 over the config axes");
    add_common(sweep_cmd, args);
    auto* ssmap_cmd = app.add_subcommand("ss-map", "steady-state |psi_ss|^2 map");
    add_common(ssmap_cmd, args);
    auto* prop_cmd = app.add_subcommand("propagate", "time evolution of the spin model");
    add_common(prop_cmd, args);
    auto* g2_cmd = app.add_subcommand("g2", "photon-photon correlation g2(tau)");
    add_common(g2_cmd, args);
    auto* bs_cmd = app.add_subcommand("bound-states", "relative-coordinate eigenpairs");
    add_common(bs_cmd, args);
    bs_cmd->add_option("--count", bound_count, "number of bound states")
        ->check(CLI::PositiveNumber);
    auto* eff_cmd = app.add_subcommand("effective-propagate",
                                       "split-step evolution of the polariton model");
    add_common(eff_cmd, args);
    auto* design_cmd = app.add_subcommand("design-budget", "pulse-length optimization");
    add_common(design_cmd, args);
    design_cmd->add_option("--c-lambda", c_lambda, "wavelength-scale cooperativity");
    design_cmd->add_option("--beta", beta, "bandwidth margin factor");
    design_cmd->add_option("--gamma-1d", gamma_1d, "guided-mode rate");
    design_cmd->add_option("--gamma-prime", gamma_prime, "free-space rate");
    auto* oracle_cmd =
        app.add_subcommand("oracle", "transfer-matrix reference transmission");
    add_common(oracle_cmd, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep_cmd->parsed()) return cmd_transmission_sweep(args);
        if (ssmap_cmd->parsed()) return cmd_ss_map(args);
        if (prop_cmd->parsed()) return cmd_propagate(args);
        if (g2_cmd->parsed()) return cmd_g2(args);
        if (bs_cmd->parsed()) return cmd_bound_states(args, bound_count);
        if (eff_cmd->parsed()) return cmd_effective_propagate(args);
        if (design_cmd->parsed())
            return cmd_design_budget(args, c_lambda, beta, gamma_1d, gamma_prime);
        if (oracle_cmd->parsed()) return cmd_oracle(args);
    } catch (const ConfigError& e) {
        nlohmann::json report = {{"error", "config"}, {"details", e.errors}};
        std::cerr << report.dump(2) << std::endl;
        return 2;
    } catch (const std::exception& e) {
        nlohmann::json report = {{"error", "solver"}, {"details", {e.what()}}};
        std::cerr << report.dump(2) << std::endl;
        return 3;
    }
    return 0;
}
