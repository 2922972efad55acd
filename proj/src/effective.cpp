#include "wgqed/effective.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace wgqed {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<double> fft_wavevectors(int n, double length) {
    std::vector<double> k(n);
    const double dk = 2.0 * std::numbers::pi / length;
    for (int j = 0; j < n; ++j) k[j] = dk * (j < (n + 1) / 2 ? j : j - n);
    return k;
}

}  // namespace

TwoBodyTrajectory propagate_effective(const InteractionPotential& potential,
                                      const PolaritonParams& params,
                                      const TwoBodyGrid& grid, const MatrixXc& psi0,
                                      const std::vector<double>& t_grid,
                                      const EffectiveOptions& options) {
    if (grid.n_R < 4 || grid.n_r < 4 || !(grid.R_length > 0.0) || !(grid.r_max > 0.0))
        throw std::invalid_argument("propagate_effective: invalid grid");
    if (psi0.rows() != grid.n_R || psi0.cols() != grid.n_r)
        throw std::invalid_argument("propagate_effective: psi0/grid dimension mismatch");
    if (t_grid.size() < 2)
        throw std::invalid_argument("propagate_effective: need at least two times");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("propagate_effective: time grid must be increasing");
    if (params.mass == 0.0)
        throw std::invalid_argument("propagate_effective: mass must be nonzero");

    const int nR = grid.n_R, nr = grid.n_r;
    const Complex inv_m = 1.0 / params.mass;
    const auto kR = fft_wavevectors(nR, grid.R_length);
    const auto kr = fft_wavevectors(nr, 2.0 * grid.r_max);

    // diagonal-in-position piece: -2 V(|r|)
    VectorXc vhalf(nr);
    double v_max = 0.0;
    for (int k = 0; k < nr; ++k) {
        const double v = 2.0 * evaluate(potential, std::abs(grid.r(k)));
        v_max = std::max(v_max, std::abs(v));
        vhalf(k) = -v;  // energy; phase factors built per step below
    }

    // The CM part commutes with V(r), so splitting error comes only from the
    // relative kinetic term against V and scales with the state's bandwidth,
    // not the grid's; a potential-scale step is enough. Both sub-propagators
    // are exact, so there is no stability limit.
    double dt0 = options.dt;
    if (dt0 <= 0.0) dt0 = 0.05 / (v_max + 1e-9);

    Eigen::FFT<double> fft;
    std::vector<Complex> line_in(std::max(nR, nr)), line_out(std::max(nR, nr));

    MatrixXc psi = psi0;
    MatrixXc work(nR, nr);

    double cached_dt = -1.0;
    MatrixXc kin_phase(nR, nr);
    VectorXc pot_phase(nr);
    auto build_factors = [&](double dt) {
        if (dt == cached_dt) return;
        cached_dt = dt;
        for (int i = 0; i < nR; ++i) {
            const Complex cm = 0.25 * inv_m * kR[i] * kR[i] + params.group_velocity * kR[i];
            for (int k = 0; k < nr; ++k)
                kin_phase(i, k) = std::exp(-kI * dt * (cm + inv_m * kr[k] * kr[k]));
        }
        for (int k = 0; k < nr; ++k)
            pot_phase(k) = std::exp(-kI * (0.5 * dt) * vhalf(k));
    };

    auto strang_step = [&](double dt) {
        build_factors(dt);
        for (int i = 0; i < nR; ++i) psi.row(i).array() *= pot_phase.transpose().array();
        // to wavevector space: along R (columns are contiguous), then along r
        for (int k = 0; k < nr; ++k) {
            fft.fwd(line_out.data(), psi.col(k).data(), nR);
            for (int i = 0; i < nR; ++i) psi(i, k) = line_out[i];
        }
        for (int i = 0; i < nR; ++i) {
            for (int k = 0; k < nr; ++k) line_in[k] = psi(i, k);
            fft.fwd(line_out.data(), line_in.data(), nr);
            for (int k = 0; k < nr; ++k) psi(i, k) = line_out[k];
        }
        psi.array() *= kin_phase.array();
        for (int i = 0; i < nR; ++i) {
            for (int k = 0; k < nr; ++k) line_in[k] = psi(i, k);
            fft.inv(line_out.data(), line_in.data(), nr);
            for (int k = 0; k < nr; ++k) psi(i, k) = line_out[k];
        }
        for (int k = 0; k < nr; ++k) {
            fft.inv(line_out.data(), psi.col(k).data(), nR);
            for (int i = 0; i < nR; ++i) psi(i, k) = line_out[i];
        }
        for (int i = 0; i < nR; ++i) psi.row(i).array() *= pot_phase.transpose().array();
    };

    TwoBodyTrajectory traj;
    traj.grid = grid;
    const double cell = grid.dR() * grid.dr();
    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.amplitudes.push_back(psi);
        double n2 = 0.0, moment = 0.0;
        for (int i = 0; i < nR; ++i)
            for (int k = 0; k < nr; ++k) {
                const double w = std::norm(psi(i, k));
                n2 += w;
                moment += w * std::abs(grid.r(k));
            }
        traj.norm2.push_back(n2 * cell);
        traj.mean_separation.push_back(n2 > 0.0 ? moment / n2 : 0.0);
    };

    record(t_grid.front());
    const int every = std::max(1, options.store_every);
    for (std::size_t seg = 1; seg < t_grid.size(); ++seg) {
        const double span = t_grid[seg] - t_grid[seg - 1];
        const auto steps = static_cast<long>(std::ceil(span / dt0 - 1e-9));
        const double dt = span / static_cast<double>(steps);
        for (long s = 0; s < steps; ++s) strang_step(dt);
        if (seg % every == 0 || seg + 1 == t_grid.size()) record(t_grid[seg]);
    }
    if (!std::isfinite(traj.norm2.back()))
        throw std::runtime_error("propagate_effective: amplitude diverged");
    return traj;
}

}  // namespace wgqed
