// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL line.
// Run as `acceptance --criterion <n>`; without the flag all criteria run.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wgqed/bound_states.hpp"
#include "wgqed/chain.hpp"
#include "wgqed/config.hpp"
#include "wgqed/dynamics.hpp"
#include "wgqed/effective.hpp"
#include "wgqed/hamiltonian.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/polariton.hpp"
#include "wgqed/potential.hpp"
#include "wgqed/sweep.hpp"
#include "wgqed/transfer_matrix.hpp"

using namespace wgqed;

namespace {

struct Failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

DriveProfile constant_drive(Complex amplitude) {
    DriveProfile d;
    d.shape = DriveShape::Constant;
    d.amplitude = amplitude;
    return d;
}

// Steady-state normalized intensities for a chain with a uniform pair shift.
ObservableSet chain_observables(std::size_t n, const LevelParams& levels,
                                const InteractionPotential& pot, Complex drive_amp,
                                bool two_excitation) {
    const AtomChain chain = build_chain(n, 1.0);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);
    SteadyStateOptions opts;
    opts.two_excitation = two_excitation;
    const FewExcitationState st = steady_state(blocks, constant_drive(drive_amp), opts);
    return observables(chain, levels, st, drive_amp);
}

Complex sample_shifted(const BoundState& bs, double r, double offset) {
    const double x = std::max(0.0, std::abs(r) - offset);
    const double h = bs.grid[1] - bs.grid[0];
    if (x >= bs.grid.back()) return 0.0;
    const auto i = static_cast<std::size_t>(x / h);
    const double w = x / h - static_cast<double>(i);
    return (1.0 - w) * bs.wavefunction(static_cast<Eigen::Index>(i)) +
           w * bs.wavefunction(static_cast<Eigen::Index>(i + 1));
}

// Period of a damped oscillation from its first interior minimum and the
// following maximum: T = 2 (t_max - t_min).
double oscillation_period(const std::vector<double>& t, const std::vector<double>& y) {
    require(t.size() == y.size() && t.size() > 4, "oscillation trace too short");
    std::size_t i_min = 0;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] < y[i - 1] && y[i] <= y[i + 1]) {
            i_min = i;
            break;
        }
    require(i_min > 0, "no oscillation minimum found");
    std::size_t i_max = 0;
    for (std::size_t i = i_min + 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] >= y[i + 1]) {
            i_max = i;
            break;
        }
    require(i_max > i_min, "no oscillation maximum after the minimum");
    return 2.0 * (t[i_max] - t[i_min]);
}

// ---------------------------------------------------------------------------

// 1. Spin-model transmission equals the transfer-matrix product for random
//    non-interacting parameter sets (1% tolerance).
void criterion_1() {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = static_cast<std::size_t>(2 + static_cast<int>(unif(rng) * 24));
        const double g1d_max = std::min(0.2, 10.0 / (2.0 * static_cast<double>(n)));
        const double gamma_1d = 0.01 + unif(rng) * (g1d_max - 0.01);
        const bool three_level = trial % 2 == 1;
        const double detuning = -2.0 + 4.0 * unif(rng);

        LevelParams levels;
        levels.gamma_1d = gamma_1d;
        ScattererCoefficients coeffs;
        if (three_level) {
            const double omega = 0.5 + 1.5 * unif(rng);
            levels.rabi_control = omega;
            levels.probe_detuning = detuning;
            levels.two_photon_detuning = detuning;
            coeffs = three_level_coefficients(gamma_1d, 1.0, omega, detuning);
        } else {
            levels.probe_detuning = detuning;
            coeffs = two_level_coefficients(gamma_1d, 1.0, detuning);
        }
        const ObservableSet obs =
            chain_observables(n, levels, uniform_potential(0.0), 1e-3, false);
        const double expect =
            std::norm(chain_transmission(coeffs, n, 1.5 * std::numbers::pi));
        const double err = std::abs(obs.i1 - expect) / std::max(expect, 1e-12);
        require(err < 0.01, "trial " + std::to_string(trial) + ": i1 = " + fmt(obs.i1) +
                                " vs transfer-matrix " + fmt(expect));
    }
}

// 2. Resonant two-level attenuation follows Beer-Lambert exp(-D) at weak
//    single-atom coupling (5% tolerance for D up to 5).
void criterion_2() {
    const double gamma_1d = 0.01;
    for (std::size_t n : {25u, 50u, 100u, 250u}) {
        LevelParams levels;
        levels.gamma_1d = gamma_1d;
        const ObservableSet obs =
            chain_observables(n, levels, uniform_potential(0.0), 1e-3, false);
        const double d = optical_depth(n, gamma_1d, 1.0);
        const double expect = std::exp(-d);
        require(std::abs(obs.i1 - expect) / expect < 0.05,
                "D = " + fmt(d) + ": i1 = " + fmt(obs.i1) + " vs " + fmt(expect));
    }
}

// 3. EIT transparency at the bare two-photon resonance: both one- and
//    two-photon intensities transmit. N reduced to 40 with Gamma_1D
//    rescaled to keep D = 400.
void criterion_3() {
    LevelParams levels;
    levels.gamma_1d = 5.0;
    levels.rabi_control = 2.0;
    const ObservableSet obs =
        chain_observables(40, levels, uniform_potential(0.0), 1e-2, true);
    require(obs.i1 >= 0.99, "i1 = " + fmt(obs.i1) + " < 0.99");
    const double ratio = obs.i2 / (obs.i1 * obs.i1);
    require(std::abs(ratio - 1.0) < 1e-2, "i2/i1^2 = " + fmt(ratio));
}

// 4. Correlated transparency: the two-photon transmission peak tracks the
//    pair resonance delta = U while the one-photon peak stays at delta = 0.
//    Reduced optical depth D = 200 (N = 50, Gamma_1D = 2); at lower depth the
//    bunching lobes at the transparency-window edge still out-compete the
//    pair-resonance peak. Both axes share the 0.25 grid step over
//    [-1.5, 1.5]; at this depth the continuous peak sits within ~0.15 of
//    delta = U, inside one step.
void criterion_4() {
    const double step = 0.25;
    std::vector<double> deltas;
    for (int i = -6; i <= 6; ++i) deltas.push_back(step * i);

    for (double u_pair : {-0.5, -0.25, 0.0, 0.25, 0.5}) {
        // stored potential strength: a shift -U moves the pair resonance to
        // delta = U
        const InteractionPotential pot = uniform_potential(-u_pair);
        double best_i1 = -1.0, best_i1_delta = 0.0;
        double best_i2 = -1.0, best_i2_delta = 0.0;
        for (double delta : deltas) {
            LevelParams levels;
            levels.gamma_1d = 2.0;
            levels.rabi_control = 2.0;
            // probe scan at fixed control: the probe detuning moves together
            // with the two-photon detuning
            levels.two_photon_detuning = delta;
            levels.probe_detuning = delta;
            const ObservableSet obs = chain_observables(50, levels, pot, 1e-2, true);
            if (obs.i1 > best_i1) {
                best_i1 = obs.i1;
                best_i1_delta = delta;
            }
            if (obs.i2 > best_i2) {
                best_i2 = obs.i2;
                best_i2_delta = delta;
            }
        }
        require(std::abs(best_i2_delta - u_pair) <= step + 1e-9,
                "U = " + fmt(u_pair) + ": argmax i2 at delta = " + fmt(best_i2_delta));
        require(std::abs(best_i1_delta) <= step + 1e-9,
                "U = " + fmt(u_pair) + ": argmax i1 at delta = " + fmt(best_i1_delta));
    }
}

// 5. Square-well blockade: off the shifted pair resonance the stored pair
//    amplitude is excluded from separations inside the well.
void criterion_5() {
    ScenarioConfig cfg = preset("fig3_squarewell");
    cfg.levels.two_photon_detuning = 0.0;
    const AtomChain chain = cfg.make_chain();
    const HamiltonianBlocks blocks =
        assemble_blocks(chain, cfg.levels, cfg.potential);
    const FewExcitationState st = steady_state(blocks, cfg.drive);

    // Compare populations where both separation classes are geometrically
    // possible: a pair centered within r_s/2 of a chain end cannot reach
    // separations beyond the well, so the edge regions would count blockaded
    // pairs against a zero reference.
    double inside = 0.0, outside = 0.0;
    const auto n = static_cast<Eigen::Index>(chain.count);
    const double lo = chain.positions.front() + cfg.potential.r_s;
    const double hi = chain.positions.back() - cfg.potential.r_s;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            const double cm = 0.5 * (chain.positions[j] + chain.positions[l]);
            if (cm < lo || cm > hi) continue;
            const double sep = std::abs(chain.positions[j] - chain.positions[l]);
            const double w = std::norm(st.amp_ss(j, l));
            (sep < cfg.potential.r_s ? inside : outside) += w;
        }
    require(outside > 0.0, "no pair population outside the well");
    require(inside < 0.1 * outside,
            "inside/outside = " + fmt(inside / outside) + " >= 0.1");
}

// 6. Bound-state geometry of the double-band-edge molecule preset: exact
//    extremum position and a ground-state size near 24 lattice units.
void criterion_6() {
    const ScenarioConfig cfg = preset("fig4_molecule");
    const PotentialExtremum ext = potential_extremum(cfg.potential);
    const double r0_expect = 30.0 * std::log(2.0);
    require(std::abs(ext.r0 - r0_expect) < 1e-9,
            "r0 = " + fmt(ext.r0) + " vs " + fmt(r0_expect));

    const PolaritonParams pol = polariton_params(cfg.levels, cfg.density);
    const auto states = bound_states(cfg.potential, pol, 1);
    require(!states.empty(), "no bound state found");
    require(std::abs(states[0].mean_separation - 24.0) < 2.4,
            "<r> = " + fmt(states[0].mean_separation) + " not within 10% of 24");
}

// 7. Molecule breathing: the oscillation period of <r>(t) from the full spin
//    dynamics matches the effective two-body propagation within 15%, and one
//    oscillation spans an optical depth near 250.
void criterion_7() {
    LevelParams levels;
    levels.gamma_1d = 2.0;
    levels.rabi_control = 1.0;
    const InteractionPotential pot = double_band_edge(1.28, 15.0, 30.0);
    const double delta_m = 2.5;
    const double v0 = evaluate(pot, potential_extremum(pot).r0);
    levels.two_photon_detuning = -v0;
    levels.probe_detuning = delta_m + v0;

    const PolaritonParams pol = polariton_params(levels, 1.0);
    const auto states = bound_states(pot, pol, 1);
    require(!states.empty(), "no molecule state found");
    const BoundState& ground = states[0];
    // start near the input end: the packet centre moves at v_g = 1 and must
    // stay clear of the far boundary for a full oscillation period (~58)
    const double offset = 5.0;
    const double cm_center = 25.5, cm_sigma = 10.0;

    // full spin-model evolution of the offset spin wave
    const AtomChain chain = build_chain(100, 1.0);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);
    const FewExcitationState init = prepare_spin_wave(
        chain,
        [&](double z) {
            const double x = (z - cm_center) / cm_sigma;
            return Complex(std::exp(-0.5 * x * x));
        },
        [&](double r) { return sample_shifted(ground, r, offset); });

    std::vector<double> spin_t, spin_r;
    EvolveOptions opts;
    opts.t_max = 64.0;
    opts.store_every = 2000;
    opts.keep_states = false;
    opts.observer = [&](double t, const FewExcitationState& st) {
        spin_t.push_back(t);
        spin_r.push_back(mean_separation(chain, st));
    };
    DriveProfile off;
    evolve(blocks, off, init, opts);

    // effective polariton propagation of the same initial state
    TwoBodyGrid grid;
    grid.n_R = 112;
    grid.n_r = 192;
    grid.R_length = 140.0;
    grid.r_max = 90.0;
    MatrixXc psi0(grid.n_R, grid.n_r);
    for (int i = 0; i < grid.n_R; ++i)
        for (int k = 0; k < grid.n_r; ++k) {
            const double x = (grid.R(i) - cm_center) / cm_sigma;
            psi0(i, k) =
                std::exp(-0.5 * x * x) * sample_shifted(ground, grid.r(k), offset);
        }
    std::vector<double> t_grid;
    for (int i = 0; i <= 64; ++i) t_grid.push_back(static_cast<double>(i));
    const TwoBodyTrajectory eff =
        propagate_effective(pot, pol, grid, psi0, t_grid);

    const double t_spin = oscillation_period(spin_t, spin_r);
    const double t_eff = oscillation_period(eff.times, eff.mean_separation);
    require(std::abs(t_spin - t_eff) / t_eff < 0.15,
            "periods: spin " + fmt(t_spin) + " vs effective " + fmt(t_eff));

    // optical depth spanned by one oscillation: 2 n Gamma_1D / Gamma' per
    // length times the distance v_g T
    const double d_osc = 2.0 * 1.0 * levels.gamma_1d * pol.group_velocity * t_eff;
    require(std::abs(d_osc - 250.0) < 50.0,
            "one oscillation spans D = " + fmt(d_osc) + ", outside 250 +- 20%");
}

// 8. Closed-form design budget for Gamma_1D = Gamma', beta = 10,
//    C_lambda = 2e4.
void criterion_8() {
    const DesignBudget budget = design_budget(2e4, 10.0, 1.0, 1.0);
    require(budget.z0_opt >= 18.0 && budget.z0_opt <= 21.0,
            "z0 = " + fmt(budget.z0_opt));
    require(budget.total_loss >= 0.015 && budget.total_loss <= 0.025,
            "loss = " + fmt(budget.total_loss));
    require(budget.total_optical_depth >= 130.0 && budget.total_optical_depth <= 150.0,
            "D = " + fmt(budget.total_optical_depth));
}

// 9. Structural property suite.
void criterion_9() {
    std::mt19937 rng(7);
    std::normal_distribution<double> gauss;
    auto rand_c = [&] { return Complex(gauss(rng), gauss(rng)); };

    const AtomChain chain = build_chain(6, 1.0);
    LevelParams levels;
    levels.gamma_1d = 1.5;
    levels.rabi_control = 1.0;
    levels.probe_detuning = 0.3;
    levels.two_photon_detuning = -0.2;
    const InteractionPotential pot = double_band_edge(0.5, 2.0, 4.0, 0.1);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);

    // passivity: 2 Im <psi|H|psi> <= 0 on random states
    for (int trial = 0; trial < 20; ++trial) {
        FewExcitationState st = FewExcitationState::zero(6);
        for (Eigen::Index j = 0; j < 6; ++j) {
            st.amp_e(j) = rand_c();
            st.amp_s(j) = rand_c();
            for (Eigen::Index l = j + 1; l < 6; ++l) {
                st.amp_ee(j, l) = st.amp_ee(l, j) = rand_c();
                st.amp_ss(j, l) = st.amp_ss(l, j) = rand_c();
                st.amp_es(j, l) = rand_c();
                st.amp_es(l, j) = rand_c();
            }
        }
        FewExcitationState out = FewExcitationState::zero(6);
        apply_h1(blocks, st.amp_e, st.amp_s, out.amp_e, out.amp_s);
        apply_h2(blocks, st.amp_ee, st.amp_es, st.amp_ss, out.amp_ee, out.amp_es,
                 out.amp_ss);
        const Complex bracket = st.amp_e.dot(out.amp_e) + st.amp_s.dot(out.amp_s) +
                                st.amp_ee.conjugate().cwiseProduct(out.amp_ee).sum() +
                                st.amp_es.conjugate().cwiseProduct(out.amp_es).sum() +
                                st.amp_ss.conjugate().cwiseProduct(out.amp_ss).sum();
        require(bracket.imag() < 1e-10 * st.excited_norm2(), "passivity violated");
    }

    // excitation-block conservation: without drive, manifolds never mix
    {
        const FewExcitationState two = prepare_spin_wave(
            chain, [](double z) { return std::exp(-0.2 * (z - 3.5) * (z - 3.5)); },
            [](double r) { return std::exp(-0.3 * r * r); });
        EvolveOptions opts;
        opts.t_max = 4.0;
        opts.store_every = 1000000;
        DriveProfile off;
        const Trajectory traj = evolve(blocks, off, two, opts);
        const FewExcitationState& fin = traj.states.back();
        require(fin.amp_e.norm() < 1e-12 && fin.amp_s.norm() < 1e-12,
                "two-excitation state leaked into the single manifold");
        require((fin.amp_ss - fin.amp_ss.transpose()).norm() < 1e-10,
                "amp_ss lost its bosonic symmetry");
        require((fin.amp_ee - fin.amp_ee.transpose()).norm() < 1e-10,
                "amp_ee lost its bosonic symmetry");

        FewExcitationState one = FewExcitationState::zero(6);
        one.amp_s(2) = 1.0;
        const Trajectory traj1 = evolve(blocks, off, one, opts);
        require(traj1.states.back().amp_ss.norm() < 1e-12,
                "single-excitation state leaked into the pair manifold");
    }

    // g2(0) identity
    {
        const DriveProfile drive = constant_drive(1e-3);
        const FewExcitationState st = steady_state(blocks, drive);
        const ObservableSet obs = observables(chain, levels, st, drive.amplitude);
        const std::vector<double> corr = g2(chain, levels, blocks, drive, {0.0});
        const double expect = obs.i2 / (obs.i1 * obs.i1);
        require(std::abs(corr[0] - expect) < 1e-8 * expect,
                "g2(0) = " + fmt(corr[0]) + " vs i2/i1^2 = " + fmt(expect));
    }

    // split-step norm conservation at zero loss
    {
        TwoBodyGrid grid;
        grid.n_R = 16;
        grid.n_r = 64;
        grid.R_length = 10.0;
        grid.r_max = 8.0;
        MatrixXc psi0(grid.n_R, grid.n_r);
        for (int i = 0; i < grid.n_R; ++i)
            for (int k = 0; k < grid.n_r; ++k)
                psi0(i, k) = std::exp(-0.5 * (grid.R(i) - 5.0) * (grid.R(i) - 5.0) -
                                      0.25 * grid.r(k) * grid.r(k));
        PolaritonParams pol;
        pol.mass = 1.0;
        pol.group_velocity = 0.7;
        EffectiveOptions eopts;
        eopts.dt = 1e-2;  // force ~1000 genuine steps
        const TwoBodyTrajectory traj = propagate_effective(
            square_well(0.4, 2.0), pol, grid, psi0, {0.0, 10.0}, eopts);
        require(std::abs(traj.norm2.back() / traj.norm2.front() - 1.0) < 1e-6,
                "split-step norm drift " +
                    fmt(traj.norm2.back() / traj.norm2.front() - 1.0));
    }

    // bound-state grid-refinement convergence
    {
        PolaritonParams pol;
        pol.mass = 1.0;
        BoundStateOptions coarse, fine;
        coarse.grid_points = 800;
        fine.grid_points = 1600;
        const auto a = bound_states(square_well(0.5, 2.0), pol, 1, coarse);
        const auto b = bound_states(square_well(0.5, 2.0), pol, 1, fine);
        require(!a.empty() && !b.empty(), "square well lost its bound state");
        require(std::abs(a[0].energy.real() - b[0].energy.real()) <
                    1e-3 * std::abs(b[0].energy.real()),
                "refinement moved E0 by more than 0.1%");
    }

    // parallel sweep determinism
    {
        ScenarioConfig cfg;
        SweepAxis axis{"levels.probe_detuning", {}};
        for (int i = 0; i < 24; ++i) axis.values.push_back(-1.0 + 0.08 * i);
        cfg.axes = {axis};
        cfg.levels.gamma_1d = 0.1;
        auto eval = [](const ScenarioConfig& c) {
            LevelParams lv = c.levels;
            const ObservableSet obs =
                chain_observables(6, lv, uniform_potential(0.0), 1e-3, false);
            return std::vector<double>{obs.i1};
        };
        const std::string serial = sweep_to_csv(run_sweep(cfg, {"i1"}, eval, 1));
        const std::string parallel = sweep_to_csv(run_sweep(cfg, {"i1"}, eval, 4));
        require(serial == parallel, "sweep output differs across worker counts");
    }
}

// 10. Oscillation-length scaling: shrinking the band-edge strength and the
//     molecule detuning by xi = 1/3 stretches the breathing period threefold.
//     Formula-level gate; the full pulsed comparison is an extended run.
void criterion_10() {
    auto breathing_length = [](const std::string& name) {
        const ScenarioConfig cfg = preset(name);
        const PolaritonParams pol = polariton_params(cfg.levels, cfg.density);
        const auto states = bound_states(cfg.potential, pol, 2);
        require(states.size() >= 2, name + ": fewer than two molecule states");
        const double gap = std::abs(states[1].energy.real() - states[0].energy.real());
        require(gap > 0.0, name + ": degenerate molecule states");
        return oscillation_length(pol, gap);
    };
    const double l_base = breathing_length("fig4_molecule");
    const double l_scaled = breathing_length("fig4d_scaling");
    const double ratio = l_scaled / l_base;
    require(std::abs(ratio - 3.0) < 0.6,
            "oscillation-length ratio = " + fmt(ratio) + ", outside 3 +- 20%");
}

using CriterionFn = void (*)();
const CriterionFn kCriteria[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                                 criterion_5, criterion_6, criterion_7, criterion_8,
                                 criterion_9, criterion_10};

int run(int index) {
    try {
        kCriteria[index - 1]();
        std::printf("criterion %d: PASS\n", index);
        return 0;
    } catch (const Failure& f) {
        std::printf("criterion %d: FAIL (%s)\n", index, f.detail.c_str());
    } catch (const std::exception& e) {
        std::printf("criterion %d: FAIL (exception: %s)\n", index, e.what());
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion <1..10>]\n");
            return 2;
        }
    }
    if (only != 0) {
        if (only < 1 || only > 10) {
            std::fprintf(stderr, "criterion must be in 1..10\n");
            return 2;
        }
        return run(only);
    }
    int failures = 0;
    for (int i = 1; i <= 10; ++i) failures += run(i);
    return failures == 0 ? 0 : 1;
}
