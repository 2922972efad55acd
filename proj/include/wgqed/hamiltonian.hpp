#pragma once

#include "wgqed/chain.hpp"
#include "wgqed/levels.hpp"
#include "wgqed/potential.hpp"
#include "wgqed/state.hpp"

namespace wgqed {

// N_a x N_a matrix of H_wg: element (j,l) = -i(Gamma_1D/2) e^{i k_p |z_j-z_l|}.
MatrixXc waveguide_matrix(const AtomChain& chain, double gamma_1d);

// Non-Hermitian Hamiltonian blocks of the spin model, i d|psi>/dt = H|psi>.
// h1 acts on the single-excitation basis {e_1..e_N, s_1..s_N}. The
// two-excitation block is never materialized; apply_h2 implements its action
// from the single-particle matrices plus the pair-diagonal potential.
//
// Note on signs: the Hermitian diagonal carries the rotating-frame energies
// -(Delta + i Gamma'/2) for e and -(delta + i Gamma_s/2) for s (an overall
// minus relative to the bare detunings), so that all anti-Hermitian parts are
// negative semidefinite and the ss pair term is exactly -2 V(z_j - z_l).
struct HamiltonianBlocks {
    Eigen::Index n = 0;     // atom count
    MatrixXc single_e;      // E = -(Delta + i Gamma'/2) I + waveguide_matrix
    Complex s_diag = 0;     // -(delta + i Gamma_s/2)
    Complex omega = 0;      // control Rabi frequency Omega
    MatrixXc vpair;         // V(z_j - z_l), zero diagonal
    MatrixXc h1;            // 2N x 2N single-excitation block
    VectorXc b1;            // drive source pattern into e_j, -sqrt(G1d/2) e^{i k z_j}

    double norm_inf() const;  // row-sum bound used for the RK4 step check
};

HamiltonianBlocks assemble_blocks(const AtomChain& chain,
                                  const LevelParams& levels,
                                  const InteractionPotential& potential);

// One-excitation action: out = h1 * (e; s), kept as separate e/s blocks.
void apply_h1(const HamiltonianBlocks& blocks, const VectorXc& e,
              const VectorXc& s, VectorXc& out_e, VectorXc& out_s);

// Two-excitation action (hard-core projected): out = H2 * (ee, es, ss).
void apply_h2(const HamiltonianBlocks& blocks, const MatrixXc& ee,
              const MatrixXc& es, const MatrixXc& ss, MatrixXc& out_ee,
              MatrixXc& out_es, MatrixXc& out_ss);

// Drive source into the two-excitation manifold from one-excitation
// amplitudes (bosonic symmetrization on ee), excluding the E_i(t) factor.
void drive_source2(const HamiltonianBlocks& blocks, const VectorXc& e,
                   const VectorXc& s, MatrixXc& src_ee, MatrixXc& src_es);

// Diagonal of the two-excitation block (Jacobi preconditioner).
void h2_diagonal(const HamiltonianBlocks& blocks, MatrixXc& diag_ee,
                 MatrixXc& diag_es, MatrixXc& diag_ss);

}  // namespace wgqed
