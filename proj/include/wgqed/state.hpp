#pragma once

#include <Eigen/Dense>
#include <complex>

namespace wgqed {

using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

// Amplitudes of the 0-, 1- and 2-excitation manifolds.
//
// ee(j,l): both atoms in |e>, symmetric with zero diagonal, the entry is the
// coefficient of the unordered pair state |e_j e_l>. ss likewise. es(j,l):
// e on atom j, s on atom l; e and s are distinguishable roles so the full
// ordered matrix is kept (diagonal identically zero: one atom cannot carry
// both excitations).
struct FewExcitationState {
    Complex amp0 = 1.0;
    VectorXc amp_e;
    VectorXc amp_s;
    MatrixXc amp_ee;
    MatrixXc amp_es;
    MatrixXc amp_ss;

    static FewExcitationState zero(Eigen::Index n);

    Eigen::Index atom_count() const { return amp_e.size(); }

    // Norm over excited manifolds only (amp0 excluded); the hierarchy keeps
    // amp0 frozen at its input value.
    double excited_norm2() const;

    // Pair-basis norm: unordered pairs counted once.
    double manifold2_norm2() const;

    void check_symmetry(double tol = 1e-10) const;
};

}  // namespace wgqed
