#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wgqed/chain.hpp"
#include "wgqed/levels.hpp"
#include "wgqed/potential.hpp"

namespace wgqed {

struct SweepAxis {
    std::string name;  // dotted path into the config, e.g. "levels.two_photon_detuning"
    std::vector<double> values;
};

struct SolverControls {
    double dt = 0.0;       // 0: automatic
    double t_max = 0.0;
    int store_every = 1;
    double tolerance = 1e-11;
    int grid_points = 800;
    double r_max = 0.0;
    int n_R = 128;
    double R_length = 0.0;
    std::vector<double> tau_grid;  // for g2 runs
};

struct SpinWaveSpec {
    bool enabled = false;
    double cm_center = 0.0;
    double cm_width = 1.0;
    double rel_offset = 0.0;   // shift applied to the bound-state profile
    int rel_state = 0;         // which bound state seeds the relative profile
};

struct DesignSpec {
    double c_lambda = 2e4;
    double beta = 10.0;
};

// All units: Gamma' = 1, z_a = 1.
struct ScenarioConfig {
    struct ChainSpec {
        int count = 2;
        double spacing = 1.0;
        double phase = 4.71238898038468985769;  // 3*pi/2
    } chain;

    LevelParams levels;
    DriveProfile drive;
    InteractionPotential potential;
    SolverControls solver;
    SpinWaveSpec spin_wave;
    DesignSpec design;
    double density = 1.0;  // polariton linear density n
    std::vector<SweepAxis> axes;
    std::string output_dir = ".";
    unsigned seed = 0;  // reserved

    AtomChain make_chain() const;
};

// Thrown with every validation error collected, one per line.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::vector<std::string>& errors);
    std::vector<std::string> errors;
};

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);
std::string serialize_config(const ScenarioConfig& config);

// Bundled parameter presets: fig2_sweep, fig3_squarewell, fig4_molecule,
// fig4d_scaling.
std::vector<std::string> preset_names();
ScenarioConfig preset(const std::string& name);
std::string preset_text(const std::string& name);

// Apply one sweep-axis value at a dotted numeric path.
void apply_axis_value(ScenarioConfig& config, const std::string& path, double value);

}  // namespace wgqed
