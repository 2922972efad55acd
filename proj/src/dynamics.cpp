#include "wgqed/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

namespace wgqed {

namespace {

constexpr Complex kI{0.0, 1.0};

// Two-excitation amplitude triple used by the matrix-free solver.
struct Vec2 {
    MatrixXc ee, es, ss;

    static Vec2 zero(Eigen::Index n) {
        return {MatrixXc::Zero(n, n), MatrixXc::Zero(n, n), MatrixXc::Zero(n, n)};
    }
    double squaredNorm() const {
        return ee.squaredNorm() + es.squaredNorm() + ss.squaredNorm();
    }
};

Complex dot(const Vec2& a, const Vec2& b) {
    return (a.ee.conjugate().cwiseProduct(b.ee)).sum() +
           (a.es.conjugate().cwiseProduct(b.es)).sum() +
           (a.ss.conjugate().cwiseProduct(b.ss)).sum();
}

void axpy(Complex alpha, const Vec2& x, Vec2& y) {
    y.ee += alpha * x.ee;
    y.es += alpha * x.es;
    y.ss += alpha * x.ss;
}

// Block-preconditioned BiCGSTAB on the structured two-excitation operator.
// The preconditioner inverts, for every unordered pair {j, l}, the local
// 4x4 coupling of (ee, es_jl, es_lj, ss) through the control field; this is
// what keeps the iteration well conditioned at the pair resonance, where the
// bare ss diagonal vanishes and plain Jacobi breaks down.
Vec2 solve_h2(const HamiltonianBlocks& blocks, const Vec2& rhs, double tolerance,
              int max_iterations) {
    const Eigen::Index n = blocks.n;
    MatrixXc de, des, dss;
    h2_diagonal(blocks, de, des, dss);

    const Complex omega = blocks.omega;
    const Complex omega_c = std::conj(omega);
    const double floor = 1e-10 * (1.0 + blocks.norm_inf());
    std::vector<Eigen::Matrix4cd> inverses;
    inverses.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = j + 1; l < n; ++l) {
            Eigen::Matrix4cd m;
            m << de(j, l), -omega, -omega, 0.0,
                 -omega_c, des(j, l), 0.0, -omega,
                 -omega_c, 0.0, des(l, j), -omega,
                 0.0, -omega_c, -omega_c, dss(j, l);
            // degenerate local block (e.g. no control field at exact pair
            // resonance): regularize the vanishing diagonals instead
            Eigen::FullPivLU<Eigen::Matrix4cd> lu(m);
            if (!lu.isInvertible()) {
                for (int k = 0; k < 4; ++k)
                    if (std::abs(m(k, k)) < floor) m(k, k) = 1.0;
                lu.compute(m);
            }
            inverses.push_back(lu.inverse());
        }
    auto precondition = [&](const Vec2& v) {
        Vec2 out = Vec2::zero(n);
        std::size_t idx = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index l = j + 1; l < n; ++l) {
                const Eigen::Vector4cd local =
                    inverses[idx++] * Eigen::Vector4cd(v.ee(j, l), v.es(j, l),
                                                       v.es(l, j), v.ss(j, l));
                out.ee(j, l) = out.ee(l, j) = local(0);
                out.es(j, l) = local(1);
                out.es(l, j) = local(2);
                out.ss(j, l) = out.ss(l, j) = local(3);
            }
        return out;
    };
    auto apply = [&](const Vec2& v) {
        Vec2 out = Vec2::zero(n);
        apply_h2(blocks, v.ee, v.es, v.ss, out.ee, out.es, out.ss);
        return out;
    };

    const double rhs_norm = std::sqrt(rhs.squaredNorm());
    Vec2 x = Vec2::zero(n);
    if (rhs_norm == 0.0) return x;

    Vec2 r = rhs;  // x0 = 0
    Vec2 r0 = r;
    Vec2 p = Vec2::zero(n), v = Vec2::zero(n);
    Complex rho = 1.0, alpha = 1.0, w = 1.0;

    for (int it = 0; it < max_iterations; ++it) {
        const Complex rho_next = dot(r0, r);
        if (std::abs(rho_next) < 1e-300)
            throw std::runtime_error("steady_state: two-excitation solve broke down");
        const Complex beta = (rho_next / rho) * (alpha / w);
        rho = rho_next;
        // p = r + beta (p - w v)
        axpy(-w, v, p);
        p.ee = r.ee + beta * p.ee;
        p.es = r.es + beta * p.es;
        p.ss = r.ss + beta * p.ss;

        const Vec2 ph = precondition(p);
        v = apply(ph);
        alpha = rho / dot(r0, v);
        Vec2 s = r;
        axpy(-alpha, v, s);
        if (std::sqrt(s.squaredNorm()) <= tolerance * rhs_norm) {
            axpy(alpha, ph, x);
            return x;
        }
        const Vec2 sh = precondition(s);
        const Vec2 t = apply(sh);
        w = dot(t, s) / dot(t, t);
        axpy(alpha, ph, x);
        axpy(w, sh, x);
        r = s;
        axpy(-w, t, r);
        if (std::sqrt(r.squaredNorm()) <= tolerance * rhs_norm) return x;
    }
    throw std::runtime_error("steady_state: two-excitation solve did not converge in " +
                             std::to_string(max_iterations) + " iterations");
}

}  // namespace

FewExcitationState steady_state(const HamiltonianBlocks& blocks, const DriveProfile& drive,
                                const SteadyStateOptions& options) {
    if (!drive.is_constant())
        throw std::invalid_argument("steady_state: requires a constant drive");
    const Eigen::Index n = blocks.n;
    const Complex amp = drive.amplitude;

    FewExcitationState st = FewExcitationState::zero(n);

    // First order: h1 c1 = -b1 E_i.
    VectorXc rhs = VectorXc::Zero(2 * n);
    rhs.head(n) = -blocks.b1 * amp;
    Eigen::PartialPivLU<MatrixXc> lu(blocks.h1);
    const VectorXc c1 = lu.solve(rhs);
    const double residual = (blocks.h1 * c1 - rhs).norm();
    if (!(residual <= 1e-8 * (1.0 + rhs.norm())))
        throw std::runtime_error("steady_state: singular one-excitation solve (Gamma' = 0 at resonance?)");
    st.amp_e = c1.head(n);
    st.amp_s = c1.tail(n);

    if (!options.two_excitation) return st;

    // Second order: h2 c2 = -E_i b2(c1).
    Vec2 rhs2 = Vec2::zero(n);
    drive_source2(blocks, st.amp_e, st.amp_s, rhs2.ee, rhs2.es);
    rhs2.ee *= -amp;
    rhs2.es *= -amp;
    const Vec2 c2 = solve_h2(blocks, rhs2, options.tolerance, options.max_iterations);
    st.amp_ee = c2.ee;
    st.amp_es = c2.es;
    st.amp_ss = c2.ss;
    return st;
}

Trajectory evolve(const HamiltonianBlocks& blocks, const DriveProfile& drive,
                  const FewExcitationState& initial, const EvolveOptions& options) {
    const Eigen::Index n = blocks.n;
    if (initial.atom_count() != n)
        throw std::invalid_argument("evolve: state/blocks dimension mismatch");
    if (!(options.t_max > 0.0)) throw std::invalid_argument("evolve: t_max must be > 0");

    const double h_norm = blocks.norm_inf();
    const double dt_bound = 0.05 / h_norm;
    double dt = options.dt > 0.0 ? options.dt : dt_bound;
    if (dt > dt_bound * (1.0 + 1e-12))
        throw std::invalid_argument("evolve: dt exceeds the 0.05/|h| stability bound");
    const auto steps = static_cast<long>(std::ceil(options.t_max / dt - 1e-9));
    dt = options.t_max / static_cast<double>(steps);

    FewExcitationState st = initial;
    st.amp0 = initial.amp0;

    // derivative of the full hierarchy at time t
    auto derivative = [&](const FewExcitationState& y, double t, FewExcitationState& dy) {
        const Complex pump = drive.at(t);
        apply_h1(blocks, y.amp_e, y.amp_s, dy.amp_e, dy.amp_s);
        if (pump != 0.0) dy.amp_e += blocks.b1 * (pump * y.amp0);
        apply_h2(blocks, y.amp_ee, y.amp_es, y.amp_ss, dy.amp_ee, dy.amp_es, dy.amp_ss);
        if (pump != 0.0) {
            MatrixXc src_ee(n, n), src_es(n, n);
            drive_source2(blocks, y.amp_e, y.amp_s, src_ee, src_es);
            dy.amp_ee += pump * src_ee;
            dy.amp_es += pump * src_es;
        }
        dy.amp_e *= -kI;
        dy.amp_s *= -kI;
        dy.amp_ee *= -kI;
        dy.amp_es *= -kI;
        dy.amp_ss *= -kI;
        dy.amp0 = 0.0;
    };

    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(steps / options.store_every + 2));
    auto store = [&](double t) {
        traj.times.push_back(t);
        if (options.observer) options.observer(t, st);
        if (options.keep_states) traj.states.push_back(st);
    };
    store(0.0);

    FewExcitationState k1 = FewExcitationState::zero(n), k2 = k1, k3 = k1, k4 = k1,
                       tmp = k1;
    auto advance = [&](FewExcitationState& y, const FewExcitationState& k, double factor) {
        y.amp_e = st.amp_e + factor * k.amp_e;
        y.amp_s = st.amp_s + factor * k.amp_s;
        y.amp_ee = st.amp_ee + factor * k.amp_ee;
        y.amp_es = st.amp_es + factor * k.amp_es;
        y.amp_ss = st.amp_ss + factor * k.amp_ss;
        y.amp0 = st.amp0;
    };

    for (long step = 0; step < steps; ++step) {
        const double t = static_cast<double>(step) * dt;
        derivative(st, t, k1);
        advance(tmp, k1, dt / 2.0);
        derivative(tmp, t + dt / 2.0, k2);
        advance(tmp, k2, dt / 2.0);
        derivative(tmp, t + dt / 2.0, k3);
        advance(tmp, k3, dt);
        derivative(tmp, t + dt, k4);

        st.amp_e += (dt / 6.0) * (k1.amp_e + 2.0 * k2.amp_e + 2.0 * k3.amp_e + k4.amp_e);
        st.amp_s += (dt / 6.0) * (k1.amp_s + 2.0 * k2.amp_s + 2.0 * k3.amp_s + k4.amp_s);
        st.amp_ee += (dt / 6.0) * (k1.amp_ee + 2.0 * k2.amp_ee + 2.0 * k3.amp_ee + k4.amp_ee);
        st.amp_es += (dt / 6.0) * (k1.amp_es + 2.0 * k2.amp_es + 2.0 * k3.amp_es + k4.amp_es);
        st.amp_ss += (dt / 6.0) * (k1.amp_ss + 2.0 * k2.amp_ss + 2.0 * k3.amp_ss + k4.amp_ss);

        if (step % 200 == 0 && !std::isfinite(st.excited_norm2()))
            throw std::runtime_error("evolve: NaN detected at t = " + std::to_string(t));

        if ((step + 1) % options.store_every == 0 || step + 1 == steps)
            store(static_cast<double>(step + 1) * dt);
    }
    if (!std::isfinite(st.excited_norm2()))
        throw std::runtime_error("evolve: NaN detected at final time");
    return traj;
}

FewExcitationState prepare_spin_wave(const AtomChain& chain,
                                     const std::function<Complex(double)>& cm_profile,
                                     const std::function<Complex(double)>& rel_profile) {
    const auto n = static_cast<Eigen::Index>(chain.count);
    const double k = chain.probe_wavevector();
    FewExcitationState st = FewExcitationState::zero(n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index l = 0; l < n; ++l) {
            if (j == l) continue;
            const double zj = chain.positions[j], zl = chain.positions[l];
            const Complex rel = 0.5 * (rel_profile(zj - zl) + rel_profile(zl - zj));
            st.amp_ss(j, l) = cm_profile(0.5 * (zj + zl)) * rel *
                              std::exp(kI * (k * (zj + zl)));
        }
    const double norm2 = st.manifold2_norm2();
    if (!(norm2 > 1e-24))
        throw std::invalid_argument("prepare_spin_wave: profile symmetrizes to zero");
    st.amp_ss /= std::sqrt(norm2);
    return st;
}

}  // namespace wgqed
