#pragma once

#include <vector>

#include "wgqed/polariton.hpp"
#include "wgqed/potential.hpp"

namespace wgqed {

// Eigenstates of the relative-coordinate Hamiltonian
//   H_rel = -(1/m) d^2/dr^2 - 2 V(r)
// discretized on [0, r_max] with an even (Neumann) condition at r = 0
// implementing bosonic symmetry and a hard wall at r_max.
struct BoundState {
    Complex energy = 0;
    std::vector<double> grid;
    VectorXc wavefunction;  // normalized, sum |psi|^2 dr = 1
    double mean_separation = 0.0;
};

struct BoundStateOptions {
    double r_max = 0.0;   // 0: use 5 * max interaction length
    int grid_points = 800;
    double localization_tail = 1e-3;  // max tail fraction in the outer 15%
};

// Returns up to `count` bound (localized) eigenpairs, most strongly bound
// first. Empty when the potential supports none.
std::vector<BoundState> bound_states(const InteractionPotential& potential,
                                     const PolaritonParams& params, int count,
                                     const BoundStateOptions& options = {});

}  // namespace wgqed
