#include "wgqed/band_edge.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

double attenuation_length(const BandEdgeParams& band, bool two_band) {
    if (!(band.delta_band > 0.0))
        throw std::invalid_argument("attenuation_length: delta_band must be > 0");
    const double factor = two_band ? 2.0 : 1.0;
    return std::sqrt(factor * band.curvature * band.band_frequency /
                     (band.band_wavevector * band.band_wavevector * band.delta_band));
}

double interaction_strength(const BandEdgeParams& band) {
    if (band.delta_band == 0.0)
        throw std::invalid_argument("interaction_strength: delta_band must be nonzero");
    if (!(band.drive_ratio > 0.0 && band.drive_ratio < 1.0))
        throw std::invalid_argument("interaction_strength: drive_ratio must be in (0, 1)");
    return band.drive_ratio * band.g * band.g / band.delta_band;
}

double loss_rate(double interaction_g, double cooperativity) {
    if (!(cooperativity > 0.0))
        throw std::invalid_argument("loss_rate: cooperativity must be > 0");
    return 2.0 * interaction_g / std::sqrt(cooperativity);
}

double cooperativity_at_range(double c_lambda, double attenuation, double lambda) {
    if (!(c_lambda > 0.0) || !(attenuation > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("cooperativity_at_range: all inputs must be > 0");
    return c_lambda * lambda / attenuation;
}

}  // namespace wgqed
