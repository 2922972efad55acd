#pragma once

#include <vector>

#include "wgqed/dynamics.hpp"
#include "wgqed/hamiltonian.hpp"

namespace wgqed {

// Output field amplitudes at detection position z >= z_N (the common e^{i k z}
// propagation phase is dropped):
//   amp1 = E_i + i sqrt(G1d/2) sum_j psi_e^j e^{-i k z_j}
//   amp2 = <vac| E_o E_o |psi>, assembled from E_i^2, cross terms and the
//          ee amplitudes.
struct OutputAmplitudes {
    Complex amp1 = 0;
    Complex amp2_equal_time = 0;
};

OutputAmplitudes output_field(const AtomChain& chain, const LevelParams& levels,
                              const FewExcitationState& state,
                              Complex drive_amplitude, double position);

struct ObservableSet {
    double i1 = 0.0;  // |amp1|^2 / |E_i|^2
    double i2 = 0.0;  // |amp2|^2 / |E_i|^4
    Eigen::MatrixXd ss_map;   // |psi_ss^{jl}|^2
    double mean_separation = 0.0;  // <|z_j - z_l|> weighted by |psi_ss|^2
};

ObservableSet observables(const AtomChain& chain, const LevelParams& levels,
                          const FewExcitationState& state,
                          Complex drive_amplitude);

double mean_separation(const AtomChain& chain, const FewExcitationState& state);

// Second-order correlation of the output under constant drive, via the
// amplitude method: apply the output map to the steady two-excitation state,
// evolve the conditioned one-excitation state for tau under the driven
// dynamics, apply the output map again. g2(tau) -> 1 as tau -> infinity.
std::vector<double> g2(const AtomChain& chain, const LevelParams& levels,
                       const HamiltonianBlocks& blocks, const DriveProfile& drive,
                       const std::vector<double>& tau_grid);

}  // namespace wgqed
