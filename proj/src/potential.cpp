#include "wgqed/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wgqed {

void InteractionPotential::validate() const {
    if (!(loss_rate_s >= 0.0))
        throw std::invalid_argument("potential: loss_rate_s must be >= 0");
    switch (kind) {
        case PotentialKind::Uniform:
            break;
        case PotentialKind::SquareWell:
            if (!(r_s > 0.0)) throw std::invalid_argument("potential: r_s must be > 0");
            break;
        case PotentialKind::SingleExponential:
            if (!(l > 0.0)) throw std::invalid_argument("potential: l must be > 0");
            break;
        case PotentialKind::DoubleBandEdge:
            if (!(l_u > 0.0) || !(l_l > 0.0))
                throw std::invalid_argument("potential: lengths must be > 0");
            if (l_u == l_l)
                throw std::invalid_argument("potential: l_u must differ from l_l");
            break;
        case PotentialKind::Tabulated:
            if (table_r.size() < 2 || table_r.size() != table_v.size())
                throw std::invalid_argument("potential: table needs >= 2 rows");
            if (!std::is_sorted(table_r.begin(), table_r.end()))
                throw std::invalid_argument("potential: table separations must be sorted");
            break;
    }
}

double evaluate(const InteractionPotential& p, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("evaluate: separation must be >= 0");
    switch (p.kind) {
        case PotentialKind::Uniform:
            return p.u;
        case PotentialKind::SquareWell:
            return r < p.r_s ? p.u : 0.0;
        case PotentialKind::SingleExponential:
            return p.sign * p.g * std::exp(-r / p.l);
        case PotentialKind::DoubleBandEdge:
            return p.g * (std::exp(-r / p.l_u) - std::exp(-r / p.l_l));
        case PotentialKind::Tabulated: {
            if (r < p.table_r.front() || r > p.table_r.back())
                throw std::out_of_range("evaluate: separation outside table range");
            auto it = std::upper_bound(p.table_r.begin(), p.table_r.end(), r);
            if (it == p.table_r.end()) return p.table_v.back();
            const auto hi = static_cast<std::size_t>(it - p.table_r.begin());
            if (hi == 0) return p.table_v.front();
            const double r0 = p.table_r[hi - 1], r1 = p.table_r[hi];
            const double w = (r - r0) / (r1 - r0);
            return (1.0 - w) * p.table_v[hi - 1] + w * p.table_v[hi];
        }
    }
    throw std::logic_error("evaluate: unknown potential kind");
}

PotentialExtremum potential_extremum(const InteractionPotential& p) {
    if (p.kind == PotentialKind::DoubleBandEdge) {
        const double lu = p.l_u, ll = p.l_l;
        PotentialExtremum ext;
        ext.r0 = std::log(ll / lu) * lu * ll / (ll - lu);
        ext.depth = std::abs(evaluate(p, ext.r0));
        return ext;
    }
    if (p.kind == PotentialKind::Tabulated) {
        // interior extremum of the sampled values
        std::size_t best = 0;
        double best_abs = 0.0;
        for (std::size_t i = 1; i + 1 < p.table_r.size(); ++i) {
            const double v = p.table_v[i];
            const bool interior_min = v < p.table_v[i - 1] && v < p.table_v[i + 1];
            const bool interior_max = v > p.table_v[i - 1] && v > p.table_v[i + 1];
            if ((interior_min || interior_max) && std::abs(v) > best_abs) {
                best = i;
                best_abs = std::abs(v);
            }
        }
        if (best == 0)
            throw std::invalid_argument("potential_extremum: no interior extremum");
        return {p.table_r[best], best_abs};
    }
    throw std::invalid_argument(
        "potential_extremum: defined for double_band_edge and tabulated kinds");
}

InteractionPotential load_tabulated(const std::string& path, double loss_rate_s) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_tabulated: cannot open " + path);
    InteractionPotential p;
    p.kind = PotentialKind::Tabulated;
    p.loss_rate_s = loss_rate_s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double r = 0.0, v = 0.0;
        if (!(row >> r >> v))
            throw std::runtime_error("load_tabulated: malformed row: " + line);
        p.table_r.push_back(r);
        p.table_v.push_back(v);
    }
    p.validate();
    return p;
}

InteractionPotential uniform_potential(double u, double loss_rate_s) {
    InteractionPotential p;
    p.kind = PotentialKind::Uniform;
    p.u = u;
    p.loss_rate_s = loss_rate_s;
    return p;
}

InteractionPotential square_well(double u, double r_s, double loss_rate_s) {
    InteractionPotential p;
    p.kind = PotentialKind::SquareWell;
    p.u = u;
    p.r_s = r_s;
    p.loss_rate_s = loss_rate_s;
    p.validate();
    return p;
}

InteractionPotential single_exponential(double g, double l, double sign,
                                        double loss_rate_s) {
    InteractionPotential p;
    p.kind = PotentialKind::SingleExponential;
    p.g = g;
    p.l = l;
    p.sign = sign;
    p.loss_rate_s = loss_rate_s;
    p.validate();
    return p;
}

InteractionPotential double_band_edge(double g, double l_u, double l_l,
                                      double loss_rate_s) {
    InteractionPotential p;
    p.kind = PotentialKind::DoubleBandEdge;
    p.g = g;
    p.l_u = l_u;
    p.l_l = l_l;
    p.loss_rate_s = loss_rate_s;
    p.validate();
    return p;
}

}  // namespace wgqed
