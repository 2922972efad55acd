#include "wgqed/levels.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

void LevelParams::validate() const {
    if (!(gamma_1d >= 0.0)) throw std::invalid_argument("LevelParams: gamma_1d must be >= 0");
    if (!(gamma_prime > 0.0)) throw std::invalid_argument("LevelParams: gamma_prime must be > 0");
    if (!std::isfinite(gamma_1d) || !std::isfinite(gamma_prime) ||
        !std::isfinite(probe_detuning) || !std::isfinite(two_photon_detuning) ||
        !std::isfinite(rabi_control.real()) || !std::isfinite(rabi_control.imag()))
        throw std::invalid_argument("LevelParams: non-finite value");
}

std::complex<double> DriveProfile::at(double t) const {
    switch (shape) {
        case DriveShape::Off:
            return 0.0;
        case DriveShape::Constant:
            return amplitude;
        case DriveShape::GaussianPulse: {
            // Intensity I(z) ~ exp(-8 z^2 / z0^2) maps to amplitude
            // exp(-4 ((t - t_c)/T)^2) for T = z0 / v_g.
            const double x = (t - pulse_center) / pulse_length;
            return amplitude * std::exp(-4.0 * x * x);
        }
    }
    return 0.0;
}

bool DriveProfile::weak(double gamma_prime) const {
    return std::norm(amplitude) <= 1e-2 * gamma_prime;
}

}  // namespace wgqed
