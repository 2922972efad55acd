#pragma once

#include <vector>

#include "wgqed/polariton.hpp"
#include "wgqed/potential.hpp"

namespace wgqed {

// Two-body amplitude psi(R, r) on a periodic center-of-mass grid and a
// symmetric relative grid r in [-r_max, r_max) (even data <=> Neumann at 0).
struct TwoBodyGrid {
    int n_R = 0;
    int n_r = 0;
    double R_length = 0.0;  // CM domain [0, R_length)
    double r_max = 0.0;

    double dR() const { return R_length / n_R; }
    double dr() const { return 2.0 * r_max / n_r; }
    double R(int i) const { return i * dR(); }
    double r(int k) const { return -r_max + k * dr(); }
};

struct TwoBodyTrajectory {
    TwoBodyGrid grid;
    std::vector<double> times;
    std::vector<MatrixXc> amplitudes;      // indexed (R, r)
    std::vector<double> mean_separation;   // <|r|> per stored time
    std::vector<double> norm2;
};

struct EffectiveOptions {
    double dt = 0.0;  // 0: auto from the spectral bandwidth
    int store_every = 1;
};

// Strang split-step spectral evolution of H_cm x 1 + 1 x H_rel with
//   H_cm  = -(1/4m) d^2/dR^2 - i v_g d/dR,
//   H_rel = -(1/m)  d^2/dr^2 - 2 V(r).
// The complex mass keeps dispersion and loss exact in wavevector space.
TwoBodyTrajectory propagate_effective(const InteractionPotential& potential,
                                      const PolaritonParams& params,
                                      const TwoBodyGrid& grid,
                                      const MatrixXc& psi0,
                                      const std::vector<double>& t_grid,
                                      const EffectiveOptions& options = {});

}  // namespace wgqed
