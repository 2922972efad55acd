#pragma once

#include <string>
#include <vector>

namespace wgqed {

// Atom-atom interaction V(r) acting on pairs of |s> excitations.
//
// Sign convention: H_ss = -hbar * sum_{j!=l} sigma_ss^j sigma_ss^l V(z_j-z_l),
// i.e. positive V lowers the pair energy (attractive for the ss amplitudes).
enum class PotentialKind {
    Uniform,
    SquareWell,
    SingleExponential,
    DoubleBandEdge,
    Tabulated,
};

struct InteractionPotential {
    PotentialKind kind = PotentialKind::Uniform;

    // Uniform / SquareWell
    double u = 0.0;    // strength U
    double r_s = 0.0;  // well radius (SquareWell)

    // SingleExponential: sign * g * exp(-r/l)
    double g = 0.0;
    double l = 1.0;
    double sign = 1.0;

    // DoubleBandEdge: g * (exp(-r/l_u) - exp(-r/l_l))
    double l_u = 1.0;
    double l_l = 2.0;

    // Tabulated: linear interpolation on (separation, rate) samples
    std::vector<double> table_r;
    std::vector<double> table_v;

    // Per-atom loss rate Gamma_s for population in |s>, applied as a
    // state-independent imaginary diagonal.
    double loss_rate_s = 0.0;

    void validate() const;
};

double evaluate(const InteractionPotential& potential, double separation);

// Interior extremum of the pair energy. For DoubleBandEdge the closed form is
// r0 = ln(l_l/l_u) * l_u*l_l / (l_l - l_u); depth = |V(r0)|.
struct PotentialExtremum {
    double r0 = 0.0;
    double depth = 0.0;
};
PotentialExtremum potential_extremum(const InteractionPotential& potential);

InteractionPotential load_tabulated(const std::string& path,
                                    double loss_rate_s = 0.0);

InteractionPotential uniform_potential(double u, double loss_rate_s = 0.0);
InteractionPotential square_well(double u, double r_s, double loss_rate_s = 0.0);
InteractionPotential single_exponential(double g, double l, double sign,
                                        double loss_rate_s = 0.0);
InteractionPotential double_band_edge(double g, double l_u, double l_l,
                                      double loss_rate_s = 0.0);

}  // namespace wgqed
