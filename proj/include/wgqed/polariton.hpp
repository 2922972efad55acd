#pragma once

#include "wgqed/levels.hpp"
#include "wgqed/state.hpp"

namespace wgqed {

// Coefficient set of the effective polariton Hamiltonian.
// v_g = 2|Omega|^2/(Gamma_1D n), m = -|Omega|^2/((2 Delta_M + i Gamma') v_g^2)
// with hbar = 1 and Delta_M = Delta + delta.
struct PolaritonParams {
    double group_velocity = 0.0;
    Complex mass = 0;
    double delta_m = 0.0;
    double density = 0.0;
    double mixing_angle = 0.0;  // tan(theta) = sqrt(c n Gamma_1D / (2 |Omega|^2))
};

PolaritonParams polariton_params(const LevelParams& levels, double density);

// Harmonic molecule oscillation frequency and spatial period,
//   omega_M = 32 v_g |Delta_M| / (Gamma_1D n z0^2),   L_o = 2 pi v_g / omega_M,
// with the EIT-window restriction L_o > pi z0 / 2.
struct OscillationEstimate {
    double omega_m = 0.0;
    double l_o = 0.0;
    bool within_eit_window = true;
};

OscillationEstimate oscillation_frequency(const PolaritonParams& params,
                                          double gamma_1d, double z0);
double oscillation_length(const PolaritonParams& params, double omega_m);

// Pulse-length optimization of the total (propagation + interaction) loss:
//   z0_opt = 2 (4 C_lambda Gamma'^2 / (beta Gamma_1D)^2)^(1/3)
//   loss   = exp(-6 pi (2 beta^2 Gamma' / (C_lambda Gamma_1D))^(1/3))
//          = exp(-48 pi / D_p)
// total_optical_depth adds room for the molecule itself (one pulse length at
// each end of the oscillation stroke, L_s = (pi/2 + 2) z0).
struct DesignBudget {
    double z0_opt = 0.0;
    double total_loss = 0.0;
    double pulse_optical_depth = 0.0;  // D_p spanned by one pulse length
    double total_optical_depth = 0.0;  // for one full oscillation
};

DesignBudget design_budget(double c_lambda, double beta, double gamma_1d,
                           double gamma_prime);

}  // namespace wgqed
