#include "wgqed/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

namespace {
constexpr Complex kI{0.0, 1.0};
}

OutputAmplitudes output_field(const AtomChain& chain, const LevelParams& levels,
                              const FewExcitationState& state, Complex drive_amplitude,
                              double position) {
    const auto n = static_cast<Eigen::Index>(chain.count);
    if (state.atom_count() != n)
        throw std::invalid_argument("output_field: state/chain mismatch");
    if (position < chain.positions.back())
        throw std::invalid_argument("output_field: detection position inside the chain");

    const double k = chain.probe_wavevector();
    const Complex coupling = kI * std::sqrt(levels.gamma_1d / 2.0);

    VectorXc phases(n);
    for (Eigen::Index j = 0; j < n; ++j)
        phases(j) = std::exp(-kI * (k * chain.positions[j]));

    OutputAmplitudes out;
    const Complex atomic1 =
        coupling * (phases.array() * state.amp_e.array()).sum();
    out.amp1 = drive_amplitude * state.amp0 + atomic1;

    // <vac| E_o E_o |psi>: E_i^2, two cross terms, and the ee pairs (each
    // unordered pair is annihilated by either operator ordering).
    Complex pair_sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            if (j == l) continue;
            pair_sum += phases(j) * phases(l) * state.amp_ee(j, l);
        }
    out.amp2_equal_time = drive_amplitude * drive_amplitude * state.amp0 +
                          2.0 * drive_amplitude * atomic1 +
                          coupling * coupling * pair_sum;
    return out;
}

double mean_separation(const AtomChain& chain, const FewExcitationState& state) {
    const auto n = static_cast<Eigen::Index>(chain.count);
    double weight = 0.0, moment = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            const double w = std::norm(state.amp_ss(j, l));
            weight += w;
            moment += w * std::abs(chain.positions[j] - chain.positions[l]);
        }
    return weight > 0.0 ? moment / weight : 0.0;
}

ObservableSet observables(const AtomChain& chain, const LevelParams& levels,
                          const FewExcitationState& state, Complex drive_amplitude) {
    ObservableSet obs;
    obs.ss_map = state.amp_ss.cwiseAbs2();
    obs.mean_separation = mean_separation(chain, state);

    if (drive_amplitude == 0.0) return obs;  // i1/i2 undefined for drive-off runs

    const double z_out = chain.positions.back();
    const OutputAmplitudes amps =
        output_field(chain, levels, state, drive_amplitude, z_out);
    const double e2 = std::norm(drive_amplitude);
    obs.i1 = std::norm(amps.amp1) / e2;
    obs.i2 = std::norm(amps.amp2_equal_time) / (e2 * e2);
    return obs;
}

std::vector<double> g2(const AtomChain& chain, const LevelParams& levels,
                       const HamiltonianBlocks& blocks, const DriveProfile& drive,
                       const std::vector<double>& tau_grid) {
    if (!drive.is_constant())
        throw std::invalid_argument("g2: requires a stationary (constant) drive");
    for (std::size_t i = 1; i < tau_grid.size(); ++i)
        if (!(tau_grid[i] > tau_grid[i - 1]))
            throw std::invalid_argument("g2: tau grid must be strictly increasing");
    if (!tau_grid.empty() && tau_grid.front() < 0.0)
        throw std::invalid_argument("g2: tau must be >= 0");

    const Eigen::Index n = blocks.n;
    const Complex amp = drive.amplitude;
    const double k = chain.probe_wavevector();
    const Complex coupling = kI * std::sqrt(levels.gamma_1d / 2.0);

    const FewExcitationState ss = steady_state(blocks, drive);
    const OutputAmplitudes amps =
        output_field(chain, levels, ss, amp, chain.positions.back());

    VectorXc phases(n);
    for (Eigen::Index j = 0; j < n; ++j)
        phases(j) = std::exp(-kI * (k * chain.positions[j]));

    // Conditioned state after one output-field application: a coherent
    // background amp1 plus a one-excitation component.
    const Complex phi0 = amps.amp1;
    VectorXc phi_e = amp * ss.amp_e;
    VectorXc phi_s = amp * ss.amp_s;
    for (Eigen::Index m = 0; m < n; ++m) {
        Complex acc_e = 0.0, acc_s = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == m) continue;
            acc_e += phases(j) * ss.amp_ee(j, m);
            acc_s += phases(j) * ss.amp_es(j, m);
        }
        phi_e(m) += coupling * acc_e;
        phi_s(m) += coupling * acc_s;
    }

    auto second_click = [&](const VectorXc& e) {
        return amp * phi0 + coupling * (phases.array() * e.array()).sum();
    };

    const double i1 = std::norm(amps.amp1) / std::norm(amp);
    const double denom = i1 * i1 * std::norm(amp) * std::norm(amp);

    std::vector<double> result;
    result.reserve(tau_grid.size());

    const double dt_bound = 0.05 * 2.0 / blocks.norm_inf();  // one-excitation bound
    double t = 0.0;
    VectorXc ke1(n), ks1(n), ke2(n), ks2(n), ke3(n), ks3(n), ke4(n), ks4(n);
    VectorXc te(n), ts(n);
    auto deriv = [&](const VectorXc& e, const VectorXc& s, VectorXc& de, VectorXc& ds) {
        apply_h1(blocks, e, s, de, ds);
        de += blocks.b1 * (amp * phi0);
        de *= -kI;
        ds *= -kI;
    };
    for (double tau : tau_grid) {
        while (t < tau - 1e-12) {
            const double dt = std::min(dt_bound, tau - t);
            deriv(phi_e, phi_s, ke1, ks1);
            te = phi_e + 0.5 * dt * ke1;
            ts = phi_s + 0.5 * dt * ks1;
            deriv(te, ts, ke2, ks2);
            te = phi_e + 0.5 * dt * ke2;
            ts = phi_s + 0.5 * dt * ks2;
            deriv(te, ts, ke3, ks3);
            te = phi_e + dt * ke3;
            ts = phi_s + dt * ks3;
            deriv(te, ts, ke4, ks4);
            phi_e += (dt / 6.0) * (ke1 + 2.0 * ke2 + 2.0 * ke3 + ke4);
            phi_s += (dt / 6.0) * (ks1 + 2.0 * ks2 + 2.0 * ks3 + ks4);
            t += dt;
        }
        result.push_back(std::norm(second_click(phi_e)) / denom);
    }
    return result;
}

}  // namespace wgqed
