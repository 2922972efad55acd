#pragma once

#include <cstddef>

#include "wgqed/state.hpp"

namespace wgqed {

// Single-scatterer coefficients with t = 1 + r.
struct ScattererCoefficients {
    Complex r = 0;
    Complex t = 1;
};

// r = -Gamma_1D / (Gamma_1D + Gamma' - 2i Delta). The off-resonance form is an
// extension of the published resonant value, validated against the spin model.
ScattererCoefficients two_level_coefficients(double gamma_1d, double gamma_prime,
                                             double delta_probe);

// r = -Gamma_1D d / [(Gamma_1D + Gamma' - 2i d) d + 2i Omega^2], the Delta = 0
// probe-scan EIT lineshape (d doubles as the probe detuning). Refuses the
// degenerate point Omega = 0, d = 0.
ScattererCoefficients three_level_coefficients(double gamma_1d, double gamma_prime,
                                               double omega, double delta2);

// Exact 2x2 transfer-matrix product of `count` identical scatterers separated
// by free-propagation phase k_p z_a; returns the total complex transmission.
Complex chain_transmission(const ScattererCoefficients& coeffs, std::size_t count,
                           double phase);

// D = 2 N_a Gamma_1D / Gamma'.
double optical_depth(std::size_t count, double gamma_1d, double gamma_prime);

}  // namespace wgqed
