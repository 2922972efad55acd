#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace wgqed {

// Regularly spaced atomic chain. Units: lengths in z_a, rates in Gamma'.
// Default probe phase k_p * z_a = 3*pi/2 so that reflections interfere
// destructively along the chain.
struct AtomChain {
    std::size_t count = 0;
    double spacing = 1.0;
    double phase = 1.5 * std::numbers::pi;  // k_p * z_a
    std::vector<double> positions;          // z_j = j * spacing, j = 1..count

    double probe_wavevector() const { return phase / spacing; }
};

AtomChain build_chain(std::size_t count, double spacing,
                      double phase = 1.5 * std::numbers::pi);

}  // namespace wgqed
