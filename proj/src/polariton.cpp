#include "wgqed/polariton.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wgqed {

namespace {
constexpr Complex kI{0.0, 1.0};
}

PolaritonParams polariton_params(const LevelParams& levels, double density) {
    levels.validate();
    if (!(density > 0.0))
        throw std::invalid_argument("polariton_params: density must be > 0");
    const double omega2 = std::norm(levels.rabi_control);
    if (omega2 == 0.0)
        throw std::invalid_argument("polariton_params: control field must be on");

    PolaritonParams p;
    p.density = density;
    p.delta_m = levels.probe_detuning + levels.two_photon_detuning;
    p.group_velocity = 2.0 * omega2 / (levels.gamma_1d * density);
    p.mass = -omega2 / (Complex(2.0 * p.delta_m, levels.gamma_prime) *
                        p.group_velocity * p.group_velocity);
    // dark-state mixing angle in units where the bare waveguide speed is 1
    p.mixing_angle = std::atan(std::sqrt(density * levels.gamma_1d / (2.0 * omega2)));
    return p;
}

OscillationEstimate oscillation_frequency(const PolaritonParams& params,
                                          double gamma_1d, double z0) {
    if (!(z0 > 0.0)) throw std::invalid_argument("oscillation_frequency: z0 must be > 0");
    if (!(gamma_1d > 0.0))
        throw std::invalid_argument("oscillation_frequency: gamma_1d must be > 0");
    OscillationEstimate est;
    est.omega_m = 32.0 * params.group_velocity * std::abs(params.delta_m) /
                  (gamma_1d * params.density * z0 * z0);
    est.l_o = oscillation_length(params, est.omega_m);
    est.within_eit_window = est.l_o > std::numbers::pi * z0 / 2.0;
    return est;
}

double oscillation_length(const PolaritonParams& params, double omega_m) {
    if (!(omega_m > 0.0)) throw std::invalid_argument("oscillation_length: omega_m must be > 0");
    return 2.0 * std::numbers::pi * params.group_velocity / omega_m;
}

DesignBudget design_budget(double c_lambda, double beta, double gamma_1d,
                           double gamma_prime) {
    if (!(c_lambda > 0.0) || !(beta > 0.0) || !(gamma_1d > 0.0) || !(gamma_prime > 0.0))
        throw std::invalid_argument("design_budget: all inputs must be > 0");

    DesignBudget b;
    const double g2 = gamma_prime * gamma_prime;
    b.z0_opt = 2.0 * std::cbrt(4.0 * c_lambda * g2 / (beta * beta * gamma_1d * gamma_1d));
    b.total_loss =
        std::exp(-6.0 * std::numbers::pi *
                 std::cbrt(2.0 * beta * beta * gamma_prime / (c_lambda * gamma_1d)));
    b.pulse_optical_depth = 48.0 * std::numbers::pi / (-std::log(b.total_loss));
    // one oscillation stroke pi z0 / 2 plus one pulse length of clearance at
    // each end of the medium
    b.total_optical_depth = b.pulse_optical_depth * (std::numbers::pi / 2.0 + 2.0);
    return b;
}

}  // namespace wgqed
