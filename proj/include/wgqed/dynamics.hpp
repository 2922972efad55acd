#pragma once

#include <functional>
#include <vector>

#include "wgqed/hamiltonian.hpp"
#include "wgqed/levels.hpp"
#include "wgqed/state.hpp"

namespace wgqed {

// Order-by-order steady state under constant drive:
//   h1 c1 = -b1 E_i,   h2 c2 = -b2(c1) E_i.
// The one-excitation system is solved densely; the two-excitation system with
// a matrix-free Jacobi-preconditioned BiCGSTAB.
struct SteadyStateOptions {
    double tolerance = 1e-11;
    int max_iterations = 20000;
    bool two_excitation = true;
};

FewExcitationState steady_state(const HamiltonianBlocks& blocks,
                                const DriveProfile& drive,
                                const SteadyStateOptions& options = {});

struct Trajectory {
    std::vector<double> times;
    std::vector<FewExcitationState> states;
};

struct EvolveOptions {
    double dt = 0.0;          // 0: choose 0.05 / |h|_inf automatically
    double t_max = 0.0;
    int store_every = 1;      // sample every n-th step
    bool keep_states = true;  // retain sampled states in the trajectory
    // Called at every sampled time; lets long runs record observables
    // without holding the full state history.
    std::function<void(double, const FewExcitationState&)> observer;
};

// Classical fixed-step RK4 on the full amplitude hierarchy. Rejects dt above
// the 0.05/|h|_inf stability bound and aborts on NaN.
Trajectory evolve(const HamiltonianBlocks& blocks, const DriveProfile& drive,
                  const FewExcitationState& initial, const EvolveOptions& options);

// Two-photon spin wave psi_ss(j,l) ~ cm((z_j+z_l)/2) rel(z_j-z_l) carrying
// the forward EIT phase e^{i k_p (z_j + z_l)}, symmetrized and normalized.
FewExcitationState prepare_spin_wave(const AtomChain& chain,
                                     const std::function<Complex(double)>& cm_profile,
                                     const std::function<Complex(double)>& rel_profile);

}  // namespace wgqed
