#include "wgqed/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

namespace {
constexpr Complex kI{0.0, 1.0};
}

MatrixXc waveguide_matrix(const AtomChain& chain, double gamma_1d) {
    if (chain.count < 2 || chain.positions.size() != chain.count)
        throw std::invalid_argument("waveguide_matrix: invalid chain");
    if (!(gamma_1d >= 0.0))
        throw std::invalid_argument("waveguide_matrix: gamma_1d must be >= 0");

    const auto n = static_cast<Eigen::Index>(chain.count);
    const double k = chain.probe_wavevector();
    MatrixXc w(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            const double d = std::abs(chain.positions[j] - chain.positions[l]);
            w(j, l) = -kI * (gamma_1d / 2.0) * std::exp(kI * (k * d));
        }
    return w;
}

HamiltonianBlocks assemble_blocks(const AtomChain& chain, const LevelParams& levels,
                                  const InteractionPotential& potential) {
    levels.validate();
    potential.validate();
    if (chain.count < 2 || chain.positions.size() != chain.count)
        throw std::invalid_argument("assemble_blocks: invalid chain");

    const auto n = static_cast<Eigen::Index>(chain.count);
    HamiltonianBlocks blocks;
    blocks.n = n;
    blocks.omega = levels.rabi_control;
    blocks.s_diag = -(levels.two_photon_detuning + kI * potential.loss_rate_s / 2.0);

    blocks.single_e = waveguide_matrix(chain, levels.gamma_1d);
    const Complex e_diag = -(levels.probe_detuning + kI * levels.gamma_prime / 2.0);
    blocks.single_e.diagonal().array() += e_diag;

    blocks.vpair = MatrixXc::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            if (j == l) continue;
            const double sep = std::abs(chain.positions[j] - chain.positions[l]);
            const double v = evaluate(potential, sep);
            if (!std::isfinite(v))
                throw std::invalid_argument("assemble_blocks: potential not finite at a pair separation");
            blocks.vpair(j, l) = v;
        }

    blocks.h1 = MatrixXc::Zero(2 * n, 2 * n);
    blocks.h1.topLeftCorner(n, n) = blocks.single_e;
    blocks.h1.bottomRightCorner(n, n) = blocks.s_diag * MatrixXc::Identity(n, n);
    blocks.h1.topRightCorner(n, n) = -blocks.omega * MatrixXc::Identity(n, n);
    blocks.h1.bottomLeftCorner(n, n) = -std::conj(blocks.omega) * MatrixXc::Identity(n, n);

    blocks.b1 = VectorXc(n);
    const double k = chain.probe_wavevector();
    for (Eigen::Index j = 0; j < n; ++j)
        blocks.b1(j) = -std::sqrt(levels.gamma_1d / 2.0) * std::exp(kI * (k * chain.positions[j]));

    return blocks;
}

double HamiltonianBlocks::norm_inf() const {
    // Row-sum bound of the two-excitation block: two single-particle rows plus
    // the pair potential.
    double e_row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        double s = std::abs(omega);
        for (Eigen::Index l = 0; l < n; ++l) s += std::abs(single_e(j, l));
        e_row = std::max(e_row, s);
    }
    const double s_row = std::abs(s_diag) + std::abs(omega);
    const double v_max = vpair.size() ? vpair.cwiseAbs().maxCoeff() : 0.0;
    return 2.0 * std::max(e_row, s_row) + 2.0 * v_max;
}

void apply_h1(const HamiltonianBlocks& blocks, const VectorXc& e, const VectorXc& s,
              VectorXc& out_e, VectorXc& out_s) {
    out_e.noalias() = blocks.single_e * e;
    out_e.noalias() -= blocks.omega * s;
    out_s = blocks.s_diag * s;
    out_s.noalias() -= std::conj(blocks.omega) * e;
}

void apply_h2(const HamiltonianBlocks& blocks, const MatrixXc& ee, const MatrixXc& es,
              const MatrixXc& ss, MatrixXc& out_ee, MatrixXc& out_es, MatrixXc& out_ss) {
    const Complex omega = blocks.omega;
    const Complex omega_c = std::conj(omega);

    // ee: e hops on both slots; Omega converts either slot's partner from es.
    out_ee.noalias() = blocks.single_e * ee;
    out_ee += out_ee.transpose().eval();
    out_ee -= omega * (es + es.transpose());

    // es: e hop on the first slot, s energy on the second, Omega couplings.
    out_es.noalias() = blocks.single_e * es;
    out_es += blocks.s_diag * es;
    out_es -= omega_c * ee;
    out_es -= omega * ss;

    // ss: pair energy with the interaction shift -2V, Omega couplings.
    out_ss = (2.0 * blocks.s_diag) * ss - 2.0 * blocks.vpair.cwiseProduct(ss);
    out_ss -= omega_c * (es + es.transpose());

    // hard-core projection: amplitude flowing onto a doubly excited atom is
    // annihilated, not redistributed
    out_ee.diagonal().setZero();
    out_es.diagonal().setZero();
    out_ss.diagonal().setZero();
}

void drive_source2(const HamiltonianBlocks& blocks, const VectorXc& e, const VectorXc& s,
                   MatrixXc& src_ee, MatrixXc& src_es) {
    src_ee.noalias() = blocks.b1 * e.transpose();
    src_ee += src_ee.transpose().eval();
    src_es.noalias() = blocks.b1 * s.transpose();
    src_ee.diagonal().setZero();
    src_es.diagonal().setZero();
}

void h2_diagonal(const HamiltonianBlocks& blocks, MatrixXc& diag_ee, MatrixXc& diag_es,
                 MatrixXc& diag_ss) {
    const Eigen::Index n = blocks.n;
    const VectorXc e_diag = blocks.single_e.diagonal();
    diag_ee.resize(n, n);
    diag_es.resize(n, n);
    diag_ss.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            diag_ee(j, l) = e_diag(j) + e_diag(l);
            diag_es(j, l) = e_diag(j) + blocks.s_diag;
            diag_ss(j, l) = 2.0 * blocks.s_diag - 2.0 * blocks.vpair(j, l);
        }
}

}  // namespace wgqed
