#pragma once

#include <complex>

namespace wgqed {

// Single-atom spectroscopic parameters. Gamma' is the rate unit and is 1
// by convention in every bundled preset; it is kept explicit so tests can
// probe the Gamma' -> 0 limits.
struct LevelParams {
    double gamma_1d = 0.0;                  // emission into the guided mode
    double gamma_prime = 1.0;               // emission into all other modes
    std::complex<double> rabi_control = 0;  // Omega, |e> <-> |s>
    double probe_detuning = 0.0;            // Delta
    double two_photon_detuning = 0.0;       // delta

    void validate() const;
};

// Classical input field E_i(t) after the Mollow transformation.
enum class DriveShape { Off, Constant, GaussianPulse };

struct DriveProfile {
    DriveShape shape = DriveShape::Off;
    std::complex<double> amplitude = 0;  // peak E_i, sqrt(rate) units
    double pulse_center = 0.0;
    double pulse_length = 1.0;  // z0 / v_g equivalent duration

    std::complex<double> at(double t) const;
    bool is_constant() const { return shape == DriveShape::Constant; }
    bool is_off() const { return shape == DriveShape::Off; }

    // Weak-drive hierarchy is only valid to O(|E|^2); warn threshold from
    // the third-order population scale.
    bool weak(double gamma_prime = 1.0) const;
};

}  // namespace wgqed
