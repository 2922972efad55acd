#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "wgqed/chain.hpp"
#include "wgqed/dynamics.hpp"
#include "wgqed/hamiltonian.hpp"
#include "wgqed/levels.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/potential.hpp"

using namespace wgqed;

namespace {

constexpr Complex kI{0.0, 1.0};

// Random two-excitation state with the storage symmetries (symmetric ee/ss,
// full es, zero diagonals everywhere).
FewExcitationState random_state(Eigen::Index n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    auto rand_c = [&] { return Complex(g(rng), g(rng)); };
    FewExcitationState st = FewExcitationState::zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        st.amp_e(j) = rand_c();
        st.amp_s(j) = rand_c();
        for (Eigen::Index l = 0; l < n; ++l) {
            if (j == l) continue;
            st.amp_es(j, l) = rand_c();
            if (j < l) {
                st.amp_ee(j, l) = st.amp_ee(l, j) = rand_c();
                st.amp_ss(j, l) = st.amp_ss(l, j) = rand_c();
            }
        }
    }
    return st;
}

}  // namespace

TEST_CASE("waveguide matrix matches the closed form") {
    const AtomChain chain = build_chain(2, 1.0);
    const MatrixXc w = waveguide_matrix(chain, 2.0);
    // diagonal: -i Gamma_1D / 2
    CHECK(std::abs(w(0, 0) - Complex(0.0, -1.0)) < 1e-14);
    CHECK(std::abs(w(1, 1) - Complex(0.0, -1.0)) < 1e-14);
    // neighbours at phase 3*pi/2: -i e^{3 i pi / 2} = -1
    CHECK(std::abs(w(0, 1) - Complex(-1.0, 0.0)) < 1e-13);
    CHECK(std::abs(w(1, 0) - Complex(-1.0, 0.0)) < 1e-13);
}

TEST_CASE("waveguide dissipator is negative semidefinite") {
    const AtomChain chain = build_chain(5, 1.0);
    const MatrixXc w = waveguide_matrix(chain, 1.7);
    // anti-Hermitian part (W - W^dag) / (2i) must have eigenvalues <= 0
    const MatrixXc a = (w - w.adjoint()) / (2.0 * kI);
    Eigen::SelfAdjointEigenSolver<MatrixXc> es(a);
    REQUIRE(es.info() == Eigen::Success);
    CHECK(es.eigenvalues().maxCoeff() < 1e-12);
}

TEST_CASE("assemble_blocks wires detunings, control and pair potential") {
    const AtomChain chain = build_chain(3, 1.0);
    LevelParams levels;
    levels.gamma_1d = 1.0;
    levels.rabi_control = 2.0;
    levels.probe_detuning = 0.4;
    levels.two_photon_detuning = -0.3;
    const InteractionPotential pot = uniform_potential(-1.0, 0.2);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);

    CHECK(blocks.n == 3);
    CHECK(std::abs(blocks.s_diag - Complex(0.3, -0.1)) < 1e-14);
    CHECK(std::abs(blocks.omega - Complex(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(blocks.single_e(0, 0) - (Complex(-0.4, -0.5) + Complex(0.0, -0.5))) <
          1e-14);
    // pair potential: uniform value off the diagonal, hard-core zero on it
    for (Eigen::Index j = 0; j < 3; ++j)
        for (Eigen::Index l = 0; l < 3; ++l)
            CHECK(std::abs(blocks.vpair(j, l) - (j == l ? 0.0 : -1.0)) < 1e-14);
    // drive pattern magnitude sqrt(Gamma_1D / 2)
    CHECK(std::abs(std::abs(blocks.b1(1)) - std::sqrt(0.5)) < 1e-14);

    SUBCASE("control off decouples the s manifold in h1") {
        levels.rabi_control = 0.0;
        const HamiltonianBlocks dec = assemble_blocks(chain, levels, pot);
        CHECK(dec.h1.topRightCorner(3, 3).norm() == 0.0);
        CHECK(dec.h1.bottomLeftCorner(3, 3).norm() == 0.0);
    }
}

TEST_CASE("uniform interaction shifts only the ss pair diagonal") {
    const AtomChain chain = build_chain(3, 1.0);
    LevelParams levels;
    levels.gamma_1d = 1.0;
    levels.rabi_control = 1.0;
    const HamiltonianBlocks free_blocks =
        assemble_blocks(chain, levels, uniform_potential(0.0));
    const HamiltonianBlocks shifted =
        assemble_blocks(chain, levels, uniform_potential(0.7));

    const FewExcitationState st = random_state(3, 11);
    FewExcitationState a = FewExcitationState::zero(3), b = FewExcitationState::zero(3);
    apply_h2(free_blocks, st.amp_ee, st.amp_es, st.amp_ss, a.amp_ee, a.amp_es, a.amp_ss);
    apply_h2(shifted, st.amp_ee, st.amp_es, st.amp_ss, b.amp_ee, b.amp_es, b.amp_ss);
    CHECK((a.amp_ee - b.amp_ee).norm() < 1e-14);
    CHECK((a.amp_es - b.amp_es).norm() < 1e-14);
    // ss picks up the pair energy -2 u
    const MatrixXc diff = b.amp_ss - a.amp_ss;
    for (Eigen::Index j = 0; j < 3; ++j)
        for (Eigen::Index l = 0; l < 3; ++l) {
            const Complex expect = j == l ? 0.0 : -2.0 * 0.7 * st.amp_ss(j, l);
            CHECK(std::abs(diff(j, l) - expect) < 1e-13);
        }
}

TEST_CASE("two-excitation action preserves the storage symmetry") {
    const AtomChain chain = build_chain(6, 1.0);
    LevelParams levels;
    levels.gamma_1d = 1.3;
    levels.rabi_control = Complex(0.8, 0.4);
    levels.probe_detuning = 0.2;
    const HamiltonianBlocks blocks =
        assemble_blocks(chain, levels, single_exponential(0.5, 2.0, 1.0));

    const FewExcitationState st = random_state(6, 7);
    FewExcitationState out = FewExcitationState::zero(6);
    apply_h2(blocks, st.amp_ee, st.amp_es, st.amp_ss, out.amp_ee, out.amp_es, out.amp_ss);
    CHECK((out.amp_ee - out.amp_ee.transpose()).norm() < 1e-12);
    CHECK((out.amp_ss - out.amp_ss.transpose()).norm() < 1e-12);
    CHECK(out.amp_ee.diagonal().norm() == 0.0);
    CHECK(out.amp_es.diagonal().norm() == 0.0);
    CHECK(out.amp_ss.diagonal().norm() == 0.0);
}

TEST_CASE("passivity: the norm can only decrease") {
    // d/dt <psi|psi> = 2 Im <psi|H|psi> must be <= 0 for any state.
    const AtomChain chain = build_chain(5, 1.0);
    LevelParams levels;
    levels.gamma_1d = 2.0;
    levels.rabi_control = 1.0;
    levels.probe_detuning = -0.7;
    levels.two_photon_detuning = 0.3;
    const InteractionPotential pot = double_band_edge(0.6, 1.0, 2.0, 0.15);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);

    for (unsigned trial = 0; trial < 30; ++trial) {
        const FewExcitationState st = random_state(5, 100 + trial);
        FewExcitationState out = FewExcitationState::zero(5);
        apply_h1(blocks, st.amp_e, st.amp_s, out.amp_e, out.amp_s);
        apply_h2(blocks, st.amp_ee, st.amp_es, st.amp_ss, out.amp_ee, out.amp_es,
                 out.amp_ss);
        const Complex bracket = st.amp_e.dot(out.amp_e) + st.amp_s.dot(out.amp_s) +
                                st.amp_ee.conjugate().cwiseProduct(out.amp_ee).sum() +
                                st.amp_es.conjugate().cwiseProduct(out.amp_es).sum() +
                                st.amp_ss.conjugate().cwiseProduct(out.amp_ss).sum();
        CHECK(bracket.imag() < 1e-10 * st.excited_norm2());
    }
}

TEST_CASE("two-atom steady state matches a tensor-product construction") {
    // Independent oracle: the full 9-state space of two driven three-level
    // emitters, assembled with Kronecker products of single-atom operators,
    // solved order by order in the drive with frozen vacuum amplitude.
    const AtomChain chain = build_chain(2, 1.0);
    LevelParams levels;
    levels.gamma_1d = 0.8;
    levels.gamma_prime = 1.0;
    levels.rabi_control = Complex(1.1, -0.3);
    levels.probe_detuning = 0.25;
    levels.two_photon_detuning = -0.4;
    const InteractionPotential pot = uniform_potential(0.6, 0.1);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);

    DriveProfile drive;
    drive.shape = DriveShape::Constant;
    drive.amplitude = Complex(1e-3, 4e-4);
    const FewExcitationState hier = steady_state(blocks, drive);

    // single-atom basis {g, e, s}
    using M3 = Eigen::Matrix3cd;
    M3 seg = M3::Zero();  // |e><g|
    seg(1, 0) = 1.0;
    M3 ses = M3::Zero();  // |e><s|
    ses(1, 2) = 1.0;
    M3 pe = M3::Zero(), ps = M3::Zero();
    pe(1, 1) = 1.0;
    ps(2, 2) = 1.0;
    const M3 id = M3::Identity();

    auto kron = [](const M3& a, const M3& b) {
        Eigen::MatrixXcd out(9, 9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out.block(3 * i, 3 * j, 3, 3) = a(i, j) * b;
        return out;
    };

    const double k = chain.probe_wavevector();
    const Complex e_diag = -(levels.probe_detuning + kI * levels.gamma_prime / 2.0);
    const Complex s_diag = -(levels.two_photon_detuning + kI * pot.loss_rate_s / 2.0);
    const Complex omega = levels.rabi_control;

    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(9, 9);
    for (int atom = 0; atom < 2; ++atom) {
        const M3 local = e_diag * pe + s_diag * ps - omega * ses -
                         std::conj(omega) * ses.adjoint();
        h += atom == 0 ? kron(local, id) : kron(id, local);
    }
    // guided-mode exchange including the self terms
    const Eigen::MatrixXcd sig_eg[2] = {kron(seg, id), kron(id, seg)};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double d = std::abs(chain.positions[a] - chain.positions[b]);
            h += -kI * (levels.gamma_1d / 2.0) * std::exp(kI * (k * d)) * sig_eg[a] *
                 sig_eg[b].adjoint();
        }
    // pair interaction on |s s>
    h += -2.0 * pot.u * kron(ps, ps);
    // classical drive, raising part only (the hierarchy is triangular in E)
    Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(9, 9);
    for (int a = 0; a < 2; ++a) {
        const Complex b1 =
            -std::sqrt(levels.gamma_1d / 2.0) * std::exp(kI * (k * chain.positions[a]));
        raise += b1 * sig_eg[a];
    }
    h += drive.amplitude * raise;

    // steady state with the vacuum component frozen at 1:
    // h_ex c + h(:, vac) = 0 on the 8 excited components
    Eigen::MatrixXcd h_ex = h.bottomRightCorner(8, 8);
    Eigen::VectorXcd rhs = -h.block(1, 0, 8, 1);
    const Eigen::VectorXcd c = h_ex.partialPivLu().solve(rhs);

    // tensor index mapping: state = 3 * atom1 + atom2 with {g, e, s} = {0, 1, 2}
    auto at = [&](int a1, int a2) { return c(3 * a1 + a2 - 1); };
    const double tol = 1e-9;
    CHECK(std::abs(hier.amp_e(0) - at(1, 0)) < tol);
    CHECK(std::abs(hier.amp_e(1) - at(0, 1)) < tol);
    CHECK(std::abs(hier.amp_s(0) - at(2, 0)) < tol);
    CHECK(std::abs(hier.amp_s(1) - at(0, 2)) < tol);
    CHECK(std::abs(hier.amp_ee(0, 1) - at(1, 1)) < tol);
    CHECK(std::abs(hier.amp_es(0, 1) - at(1, 2)) < tol);
    CHECK(std::abs(hier.amp_es(1, 0) - at(2, 1)) < tol);
    CHECK(std::abs(hier.amp_ss(0, 1) - at(2, 2)) < tol);
}

TEST_CASE("transmission is invariant under a global chain translation") {
    LevelParams levels;
    levels.gamma_1d = 0.4;
    levels.rabi_control = 1.5;
    levels.two_photon_detuning = 0.2;
    DriveProfile drive;
    drive.shape = DriveShape::Constant;
    drive.amplitude = 1e-3;
    const InteractionPotential pot = uniform_potential(-0.5);

    AtomChain chain = build_chain(8, 1.0);
    const HamiltonianBlocks blocks = assemble_blocks(chain, levels, pot);
    const FewExcitationState st = steady_state(blocks, drive);
    const ObservableSet obs = observables(chain, levels, st, drive.amplitude);

    AtomChain moved = chain;
    for (double& z : moved.positions) z += 17.3;
    const HamiltonianBlocks mblocks = assemble_blocks(moved, levels, pot);
    const FewExcitationState mst = steady_state(mblocks, drive);
    const ObservableSet mobs = observables(moved, levels, mst, drive.amplitude);

    CHECK(obs.i1 == doctest::Approx(mobs.i1).epsilon(1e-9));
    CHECK(obs.i2 == doctest::Approx(mobs.i2).epsilon(1e-8));
}

TEST_CASE("h2 diagonal matches the action on basis states") {
    const AtomChain chain = build_chain(4, 1.0);
    LevelParams levels;
    levels.gamma_1d = 1.0;
    levels.rabi_control = 0.9;
    levels.probe_detuning = 0.1;
    levels.two_photon_detuning = -0.2;
    const HamiltonianBlocks blocks =
        assemble_blocks(chain, levels, square_well(0.4, 2.5, 0.05));

    MatrixXc de, des, dss;
    h2_diagonal(blocks, de, des, dss);
    // probe one basis state per block
    FewExcitationState probe = FewExcitationState::zero(4);
    FewExcitationState out = FewExcitationState::zero(4);
    probe.amp_ee(1, 3) = probe.amp_ee(3, 1) = 1.0;
    apply_h2(blocks, probe.amp_ee, probe.amp_es, probe.amp_ss, out.amp_ee, out.amp_es,
             out.amp_ss);
    CHECK(std::abs(out.amp_ee(1, 3) - de(1, 3)) < 1e-13);

    probe = FewExcitationState::zero(4);
    probe.amp_es(2, 0) = 1.0;
    apply_h2(blocks, probe.amp_ee, probe.amp_es, probe.amp_ss, out.amp_ee, out.amp_es,
             out.amp_ss);
    CHECK(std::abs(out.amp_es(2, 0) - des(2, 0)) < 1e-13);

    probe = FewExcitationState::zero(4);
    probe.amp_ss(0, 2) = probe.amp_ss(2, 0) = 1.0;
    apply_h2(blocks, probe.amp_ee, probe.amp_es, probe.amp_ss, out.amp_ee, out.amp_es,
             out.amp_ss);
    CHECK(std::abs(out.amp_ss(0, 2) - dss(0, 2)) < 1e-13);
}

TEST_CASE("norm_inf bounds the two-excitation row sums") {
    const AtomChain chain = build_chain(5, 1.0);
    LevelParams levels;
    levels.gamma_1d = 2.0;
    levels.rabi_control = 1.0;
    const HamiltonianBlocks blocks =
        assemble_blocks(chain, levels, uniform_potential(-1.5));
    const double bound = blocks.norm_inf();
    // apply to max-norm-1 random states; the infinity norm of the result can
    // never exceed the row-sum bound
    for (unsigned trial = 0; trial < 10; ++trial) {
        FewExcitationState st = random_state(5, 300 + trial);
        const double scale = std::max({st.amp_ee.cwiseAbs().maxCoeff(),
                                       st.amp_es.cwiseAbs().maxCoeff(),
                                       st.amp_ss.cwiseAbs().maxCoeff()});
        st.amp_ee /= scale;
        st.amp_es /= scale;
        st.amp_ss /= scale;
        FewExcitationState out = FewExcitationState::zero(5);
        apply_h2(blocks, st.amp_ee, st.amp_es, st.amp_ss, out.amp_ee, out.amp_es,
                 out.amp_ss);
        const double out_max = std::max({out.amp_ee.cwiseAbs().maxCoeff(),
                                         out.amp_es.cwiseAbs().maxCoeff(),
                                         out.amp_ss.cwiseAbs().maxCoeff()});
        CHECK(out_max <= bound * (1.0 + 1e-12));
    }
}
