#include "wgqed/state.hpp"

#include <stdexcept>

namespace wgqed {

FewExcitationState FewExcitationState::zero(Eigen::Index n) {
    FewExcitationState st;
    st.amp0 = 1.0;
    st.amp_e = VectorXc::Zero(n);
    st.amp_s = VectorXc::Zero(n);
    st.amp_ee = MatrixXc::Zero(n, n);
    st.amp_es = MatrixXc::Zero(n, n);
    st.amp_ss = MatrixXc::Zero(n, n);
    return st;
}

double FewExcitationState::excited_norm2() const {
    return amp_e.squaredNorm() + amp_s.squaredNorm() + manifold2_norm2();
}

double FewExcitationState::manifold2_norm2() const {
    // ee/ss entries are duplicated across the diagonal; es is ordered.
    return 0.5 * amp_ee.squaredNorm() + amp_es.squaredNorm() +
           0.5 * amp_ss.squaredNorm();
}

void FewExcitationState::check_symmetry(double tol) const {
    const double scale = 1.0 + amp_ee.norm() + amp_ss.norm();
    if ((amp_ee - amp_ee.transpose()).norm() > tol * scale ||
        (amp_ss - amp_ss.transpose()).norm() > tol * scale)
        throw std::runtime_error("FewExcitationState: pair symmetry violated");
    if (amp_ee.diagonal().norm() > tol * scale ||
        amp_es.diagonal().norm() > tol * scale ||
        amp_ss.diagonal().norm() > tol * scale)
        throw std::runtime_error("FewExcitationState: hard-core diagonal violated");
}

}  // namespace wgqed
