#include "wgqed/bound_states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "wgqed/potential.hpp"

namespace wgqed {

namespace {

double default_r_max(const InteractionPotential& p) {
    switch (p.kind) {
        case PotentialKind::DoubleBandEdge:
            return 5.0 * std::max(p.l_u, p.l_l);
        case PotentialKind::SingleExponential:
            return 5.0 * p.l;
        case PotentialKind::SquareWell:
            return 4.0 * p.r_s;
        case PotentialKind::Tabulated:
            return p.table_r.back();
        case PotentialKind::Uniform:
            throw std::invalid_argument(
                "bound_states: uniform potential needs an explicit r_max");
    }
    return 0.0;
}

}  // namespace

std::vector<BoundState> bound_states(const InteractionPotential& potential,
                                     const PolaritonParams& params, int count,
                                     const BoundStateOptions& options) {
    if (count < 1) throw std::invalid_argument("bound_states: count must be >= 1");
    const double r_max = options.r_max > 0.0 ? options.r_max : default_r_max(potential);
    const int m = options.grid_points;
    if (m < 16) throw std::invalid_argument("bound_states: grid too coarse");
    const double h = r_max / m;

    // H = -(1/m) d^2/dr^2 - 2 V(r), Neumann at r = 0, Dirichlet at r_max;
    // the discrete -d^2/dr^2 is tridiag(-1, 2, -1)/h^2.
    const Complex kinetic = 1.0 / params.mass / (h * h);
    MatrixXc ham = MatrixXc::Zero(m, m);
    std::vector<double> grid(m);
    double w_min = 0.0, w_max = 0.0;
    for (int i = 0; i < m; ++i) {
        grid[i] = i * h;
        const double w = -2.0 * evaluate(potential, grid[i]);
        w_min = std::min(w_min, w);
        w_max = std::max(w_max, w);
        ham(i, i) = 2.0 * kinetic + w;
        if (i + 1 < m) {
            ham(i, i + 1) = -kinetic;
            ham(i + 1, i) = -kinetic;
        }
    }
    ham(0, 1) = -2.0 * kinetic;  // even-symmetry ghost point

    Eigen::ComplexEigenSolver<MatrixXc> solver(ham);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("bound_states: eigensolver failed");

    // Keep localized states only: negligible weight in the outer 15% and an
    // energy inside the range spanned by the potential term (rules out
    // grid-scale kinetic eigenstates).
    const double kinetic_sign = (1.0 / params.mass).real() >= 0.0 ? 1.0 : -1.0;
    const double margin = 1e-6 + 0.05 * (w_max - w_min);
    const int tail_start = static_cast<int>(0.85 * m);
    std::vector<BoundState> found;
    for (int idx = 0; idx < m; ++idx) {
        const double es = kinetic_sign * solver.eigenvalues()(idx).real();
        if (es < kinetic_sign * (kinetic_sign > 0 ? w_min : w_max) - margin ||
            es > kinetic_sign * (kinetic_sign > 0 ? w_max : w_min) + margin)
            continue;
        VectorXc psi = solver.eigenvectors().col(idx);
        const double total = psi.squaredNorm();
        const double tail = psi.tail(m - tail_start).squaredNorm();
        if (tail > options.localization_tail * total) continue;

        BoundState bs;
        bs.energy = solver.eigenvalues()(idx);
        psi /= std::sqrt(total * h);
        // fix the (arbitrary) eigenvector phase: largest component real positive
        Eigen::Index peak;
        psi.cwiseAbs().maxCoeff(&peak);
        psi *= std::abs(psi(peak)) / psi(peak);
        bs.grid = grid;
        bs.wavefunction = psi;
        double moment = 0.0;
        for (int i = 0; i < m; ++i) moment += grid[i] * std::norm(psi(i)) * h;
        bs.mean_separation = moment;
        found.push_back(std::move(bs));
    }

    // Most strongly bound first: bound states sit below the continuum for a
    // positive effective kinetic sign and above it otherwise.
    std::sort(found.begin(), found.end(), [&](const BoundState& a, const BoundState& b) {
        return kinetic_sign * a.energy.real() < kinetic_sign * b.energy.real();
    });
    if (static_cast<int>(found.size()) > count) found.resize(count);
    return found;
}

}  // namespace wgqed
