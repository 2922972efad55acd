#pragma once

namespace wgqed {

// Band-edge design parameters for a single photonic-crystal band edge.
// The dispersive regime |Delta_s| >> |Omega_s| requires drive_ratio < 1.
struct BandEdgeParams {
    double g = 0.0;            // vacuum Rabi coupling g_c
    double delta_band = 0.0;   // detuning from the band edge, > 0 inside gap
    double curvature = 1.0;    // band curvature alpha
    double band_frequency = 0.0;   // omega_b
    double band_wavevector = 1.0;  // k_b
    double drive_ratio = 0.0;      // |Omega_s / Delta_s|^2
    double kappa = 0.0;
    double gamma_d = 0.0;
};

// Attenuation length of the band-gap-mediated interaction.
// two_band = false: L = sqrt(alpha * omega_b / (k_b^2 * Delta_b))
// two_band = true:  L = sqrt(2 * alpha * omega_b / (k_b^2 * Delta_b))
// The factor-2 variant matches the two-band-edge expression; the discrepancy
// between the two published forms is exposed, not resolved.
double attenuation_length(const BandEdgeParams& band, bool two_band);

// G = drive_ratio * g^2 / Delta_b
double interaction_strength(const BandEdgeParams& band);

// Per-band-edge |s>-state loss at the optimal band detuning: 2 G / sqrt(C).
double loss_rate(double interaction_g, double cooperativity);

// Cooperativity at interaction range L: C = C_lambda * lambda / L.
double cooperativity_at_range(double c_lambda, double attenuation, double lambda);

// Wavelength used in the cooperativity scaling; fixed by k_p z_a = 3*pi/2.
inline constexpr double kProbeWavelength = 4.0 / 3.0;  // in z_a

}  // namespace wgqed
