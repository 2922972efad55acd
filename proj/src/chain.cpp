#include "wgqed/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

AtomChain build_chain(std::size_t count, double spacing, double phase) {
    if (count < 2) throw std::invalid_argument("build_chain: count must be >= 2");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("build_chain: spacing must be positive and finite");
    if (!std::isfinite(phase))
        throw std::invalid_argument("build_chain: phase must be finite");

    AtomChain chain;
    chain.count = count;
    chain.spacing = spacing;
    chain.phase = phase;
    chain.positions.resize(count);
    for (std::size_t j = 0; j < count; ++j)
        chain.positions[j] = static_cast<double>(j + 1) * spacing;
    return chain;
}

}  // namespace wgqed
