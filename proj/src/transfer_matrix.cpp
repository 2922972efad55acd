#include "wgqed/transfer_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace wgqed {

namespace {
constexpr Complex kI{0.0, 1.0};
using Matrix2c = Eigen::Matrix2cd;

// Transfer matrix of a symmetric scatterer with t = 1 + r, mapping
// (right, left) field amplitudes across it; det = 1 by construction.
Matrix2c scatter_matrix(const ScattererCoefficients& c) {
    Matrix2c m;
    m << (c.t * c.t - c.r * c.r) / c.t, c.r / c.t, -c.r / c.t, 1.0 / c.t;
    return m;
}

}  // namespace

ScattererCoefficients two_level_coefficients(double gamma_1d, double gamma_prime,
                                             double delta_probe) {
    if (!(gamma_1d >= 0.0) || !(gamma_prime >= 0.0) || gamma_1d + gamma_prime <= 0.0)
        throw std::invalid_argument("two_level_coefficients: rates must be >= 0, not both 0");
    ScattererCoefficients c;
    c.r = -gamma_1d / Complex(gamma_1d + gamma_prime, -2.0 * delta_probe);
    c.t = 1.0 + c.r;
    return c;
}

ScattererCoefficients three_level_coefficients(double gamma_1d, double gamma_prime,
                                               double omega, double delta2) {
    if (!(gamma_1d >= 0.0) || !(gamma_prime >= 0.0))
        throw std::invalid_argument("three_level_coefficients: rates must be >= 0");
    const Complex denom =
        Complex(gamma_1d + gamma_prime, -2.0 * delta2) * delta2 + kI * (2.0 * omega * omega);
    if (std::abs(denom) == 0.0)
        throw std::invalid_argument("three_level_coefficients: degenerate point Omega = 0, delta = 0");
    ScattererCoefficients c;
    c.r = -gamma_1d * delta2 / denom;
    c.t = 1.0 + c.r;
    return c;
}

Complex chain_transmission(const ScattererCoefficients& coeffs, std::size_t count,
                           double phase) {
    if (count == 0) throw std::invalid_argument("chain_transmission: count must be >= 1");
    Matrix2c prop;
    prop << std::exp(kI * phase), 0.0, 0.0, std::exp(-kI * phase);
    const Matrix2c cell = scatter_matrix(coeffs) * prop;

    Matrix2c total = scatter_matrix(coeffs);
    for (std::size_t i = 1; i < count; ++i) total = cell * total;
    // unit determinant: transmission is 1 / M(1,1) in this convention
    return 1.0 / total(1, 1);
}

double optical_depth(std::size_t count, double gamma_1d, double gamma_prime) {
    if (!(gamma_prime > 0.0))
        throw std::invalid_argument("optical_depth: gamma_prime must be > 0");
    return 2.0 * static_cast<double>(count) * gamma_1d / gamma_prime;
}

}  // namespace wgqed
