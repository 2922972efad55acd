#include "wgqed/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wgqed/band_edge.hpp"

namespace wgqed {

using nlohmann::json;

namespace {

std::string join_errors(const std::vector<std::string>& errors) {
    std::ostringstream out;
    out << "invalid configuration (" << errors.size() << " error"
        << (errors.size() == 1 ? "" : "s") << "):";
    for (const auto& e : errors) out << "\n  - " << e;
    return out.str();
}

// Collects every problem instead of stopping at the first.
struct Reader {
    std::vector<std::string> errors;

    void check_keys(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
        if (!obj.is_object()) {
            errors.push_back(where + ": expected an object");
            return;
        }
        for (const auto& [key, _] : obj.items())
            if (!allowed.count(key))
                errors.push_back(where + ": unknown key '" + key + "'");
    }

    template <typename T>
    void get(const json& obj, const std::string& where, const std::string& key, T& out) {
        if (!obj.is_object() || !obj.contains(key)) return;
        try {
            out = obj.at(key).get<T>();
        } catch (const json::exception&) {
            errors.push_back(where + "." + key + ": wrong type");
        }
    }

    // complex values: a plain number or a [re, im] pair
    void get_complex(const json& obj, const std::string& where, const std::string& key,
                     std::complex<double>& out) {
        if (!obj.is_object() || !obj.contains(key)) return;
        const json& v = obj.at(key);
        if (v.is_number()) {
            out = v.get<double>();
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            out = {v[0].get<double>(), v[1].get<double>()};
        } else {
            errors.push_back(where + "." + key + ": expected a number or [re, im]");
        }
    }
};

json complex_to_json(std::complex<double> v) {
    if (v.imag() == 0.0) return v.real();
    return json::array({v.real(), v.imag()});
}

const char* shape_name(DriveShape s) {
    switch (s) {
        case DriveShape::Off: return "off";
        case DriveShape::Constant: return "constant";
        case DriveShape::GaussianPulse: return "gaussian_pulse";
    }
    return "off";
}

const char* kind_name(PotentialKind k) {
    switch (k) {
        case PotentialKind::Uniform: return "uniform";
        case PotentialKind::SquareWell: return "square_well";
        case PotentialKind::SingleExponential: return "single_exponential";
        case PotentialKind::DoubleBandEdge: return "double_band_edge";
        case PotentialKind::Tabulated: return "tabulated";
    }
    return "uniform";
}

ScenarioConfig from_json(const json& root) {
    Reader rd;
    ScenarioConfig cfg;

    rd.check_keys(root, "config",
                  {"chain", "levels", "drive", "potential", "solver", "spin_wave",
                   "design", "density", "axes", "output_dir", "seed"});

    if (root.contains("chain")) {
        const json& c = root.at("chain");
        rd.check_keys(c, "chain", {"count", "spacing", "phase"});
        rd.get(c, "chain", "count", cfg.chain.count);
        rd.get(c, "chain", "spacing", cfg.chain.spacing);
        rd.get(c, "chain", "phase", cfg.chain.phase);
    }

    if (root.contains("levels")) {
        const json& l = root.at("levels");
        rd.check_keys(l, "levels",
                      {"gamma_1d", "gamma_prime", "rabi_control", "probe_detuning",
                       "two_photon_detuning"});
        rd.get(l, "levels", "gamma_1d", cfg.levels.gamma_1d);
        rd.get(l, "levels", "gamma_prime", cfg.levels.gamma_prime);
        rd.get_complex(l, "levels", "rabi_control", cfg.levels.rabi_control);
        rd.get(l, "levels", "probe_detuning", cfg.levels.probe_detuning);
        rd.get(l, "levels", "two_photon_detuning", cfg.levels.two_photon_detuning);
    }

    if (root.contains("drive")) {
        const json& d = root.at("drive");
        rd.check_keys(d, "drive", {"shape", "amplitude", "pulse_center", "pulse_length"});
        std::string shape = shape_name(cfg.drive.shape);
        rd.get(d, "drive", "shape", shape);
        if (shape == "off") cfg.drive.shape = DriveShape::Off;
        else if (shape == "constant") cfg.drive.shape = DriveShape::Constant;
        else if (shape == "gaussian_pulse") cfg.drive.shape = DriveShape::GaussianPulse;
        else rd.errors.push_back("drive.shape: unknown shape '" + shape + "'");
        rd.get_complex(d, "drive", "amplitude", cfg.drive.amplitude);
        rd.get(d, "drive", "pulse_center", cfg.drive.pulse_center);
        rd.get(d, "drive", "pulse_length", cfg.drive.pulse_length);
    }

    if (root.contains("potential")) {
        const json& p = root.at("potential");
        rd.check_keys(p, "potential",
                      {"kind", "u", "r_s", "g", "l", "sign", "l_u", "l_l", "table_r",
                       "table_v", "loss_rate_s"});
        std::string kind = kind_name(cfg.potential.kind);
        rd.get(p, "potential", "kind", kind);
        if (kind == "uniform") cfg.potential.kind = PotentialKind::Uniform;
        else if (kind == "square_well") cfg.potential.kind = PotentialKind::SquareWell;
        else if (kind == "single_exponential") cfg.potential.kind = PotentialKind::SingleExponential;
        else if (kind == "double_band_edge") cfg.potential.kind = PotentialKind::DoubleBandEdge;
        else if (kind == "tabulated") cfg.potential.kind = PotentialKind::Tabulated;
        else rd.errors.push_back("potential.kind: unknown kind '" + kind + "'");
        rd.get(p, "potential", "u", cfg.potential.u);
        rd.get(p, "potential", "r_s", cfg.potential.r_s);
        rd.get(p, "potential", "g", cfg.potential.g);
        rd.get(p, "potential", "l", cfg.potential.l);
        rd.get(p, "potential", "sign", cfg.potential.sign);
        rd.get(p, "potential", "l_u", cfg.potential.l_u);
        rd.get(p, "potential", "l_l", cfg.potential.l_l);
        rd.get(p, "potential", "table_r", cfg.potential.table_r);
        rd.get(p, "potential", "table_v", cfg.potential.table_v);
        rd.get(p, "potential", "loss_rate_s", cfg.potential.loss_rate_s);
    }

    if (root.contains("solver")) {
        const json& s = root.at("solver");
        rd.check_keys(s, "solver",
                      {"dt", "t_max", "store_every", "tolerance", "grid_points", "r_max",
                       "n_R", "R_length", "tau_grid"});
        rd.get(s, "solver", "dt", cfg.solver.dt);
        rd.get(s, "solver", "t_max", cfg.solver.t_max);
        rd.get(s, "solver", "store_every", cfg.solver.store_every);
        rd.get(s, "solver", "tolerance", cfg.solver.tolerance);
        rd.get(s, "solver", "grid_points", cfg.solver.grid_points);
        rd.get(s, "solver", "r_max", cfg.solver.r_max);
        rd.get(s, "solver", "n_R", cfg.solver.n_R);
        rd.get(s, "solver", "R_length", cfg.solver.R_length);
        rd.get(s, "solver", "tau_grid", cfg.solver.tau_grid);
    }

    if (root.contains("spin_wave")) {
        const json& w = root.at("spin_wave");
        rd.check_keys(w, "spin_wave",
                      {"enabled", "cm_center", "cm_width", "rel_offset", "rel_state"});
        rd.get(w, "spin_wave", "enabled", cfg.spin_wave.enabled);
        rd.get(w, "spin_wave", "cm_center", cfg.spin_wave.cm_center);
        rd.get(w, "spin_wave", "cm_width", cfg.spin_wave.cm_width);
        rd.get(w, "spin_wave", "rel_offset", cfg.spin_wave.rel_offset);
        rd.get(w, "spin_wave", "rel_state", cfg.spin_wave.rel_state);
    }

    if (root.contains("design")) {
        const json& d = root.at("design");
        rd.check_keys(d, "design", {"c_lambda", "beta"});
        rd.get(d, "design", "c_lambda", cfg.design.c_lambda);
        rd.get(d, "design", "beta", cfg.design.beta);
    }

    rd.get(root, "config", "density", cfg.density);
    rd.get(root, "config", "output_dir", cfg.output_dir);
    rd.get(root, "config", "seed", cfg.seed);

    if (root.contains("axes")) {
        const json& axes = root.at("axes");
        if (!axes.is_array()) {
            rd.errors.push_back("axes: expected an array");
        } else {
            for (std::size_t i = 0; i < axes.size(); ++i) {
                const std::string where = "axes[" + std::to_string(i) + "]";
                rd.check_keys(axes[i], where, {"name", "values"});
                SweepAxis axis;
                rd.get(axes[i], where, "name", axis.name);
                rd.get(axes[i], where, "values", axis.values);
                if (axis.name.empty()) rd.errors.push_back(where + ": missing name");
                if (axis.values.empty()) rd.errors.push_back(where + ": missing values");
                cfg.axes.push_back(std::move(axis));
            }
            if (cfg.axes.size() > 2) rd.errors.push_back("axes: at most 2 supported");
        }
    }

    // cross-field sanity checks that do not need solver context
    if (cfg.chain.count < 2) rd.errors.push_back("chain.count: must be >= 2");
    if (!(cfg.chain.spacing > 0.0)) rd.errors.push_back("chain.spacing: must be > 0");
    if (!(cfg.density > 0.0)) rd.errors.push_back("density: must be > 0");
    if (cfg.solver.store_every < 1) rd.errors.push_back("solver.store_every: must be >= 1");
    try {
        cfg.levels.validate();
    } catch (const std::exception& e) {
        rd.errors.push_back(std::string("levels: ") + e.what());
    }
    try {
        cfg.potential.validate();
    } catch (const std::exception& e) {
        rd.errors.push_back(std::string("potential: ") + e.what());
    }

    if (!rd.errors.empty()) throw ConfigError(rd.errors);
    return cfg;
}

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& e)
    : std::runtime_error(join_errors(e)), errors(e) {}

AtomChain ScenarioConfig::make_chain() const {
    return build_chain(static_cast<std::size_t>(chain.count), chain.spacing, chain.phase);
}

ScenarioConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError({std::string("JSON parse error: ") + e.what()});
    }
    return from_json(root);
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    json root;
    root["chain"] = {{"count", cfg.chain.count},
                     {"spacing", cfg.chain.spacing},
                     {"phase", cfg.chain.phase}};
    root["levels"] = {{"gamma_1d", cfg.levels.gamma_1d},
                      {"gamma_prime", cfg.levels.gamma_prime},
                      {"rabi_control", complex_to_json(cfg.levels.rabi_control)},
                      {"probe_detuning", cfg.levels.probe_detuning},
                      {"two_photon_detuning", cfg.levels.two_photon_detuning}};
    root["drive"] = {{"shape", shape_name(cfg.drive.shape)},
                     {"amplitude", complex_to_json(cfg.drive.amplitude)},
                     {"pulse_center", cfg.drive.pulse_center},
                     {"pulse_length", cfg.drive.pulse_length}};
    json pot = {{"kind", kind_name(cfg.potential.kind)},
                {"loss_rate_s", cfg.potential.loss_rate_s}};
    switch (cfg.potential.kind) {
        case PotentialKind::Uniform:
            pot["u"] = cfg.potential.u;
            break;
        case PotentialKind::SquareWell:
            pot["u"] = cfg.potential.u;
            pot["r_s"] = cfg.potential.r_s;
            break;
        case PotentialKind::SingleExponential:
            pot["g"] = cfg.potential.g;
            pot["l"] = cfg.potential.l;
            pot["sign"] = cfg.potential.sign;
            break;
        case PotentialKind::DoubleBandEdge:
            pot["g"] = cfg.potential.g;
            pot["l_u"] = cfg.potential.l_u;
            pot["l_l"] = cfg.potential.l_l;
            break;
        case PotentialKind::Tabulated:
            pot["table_r"] = cfg.potential.table_r;
            pot["table_v"] = cfg.potential.table_v;
            break;
    }
    root["potential"] = std::move(pot);
    root["solver"] = {{"dt", cfg.solver.dt},
                      {"t_max", cfg.solver.t_max},
                      {"store_every", cfg.solver.store_every},
                      {"tolerance", cfg.solver.tolerance},
                      {"grid_points", cfg.solver.grid_points},
                      {"r_max", cfg.solver.r_max},
                      {"n_R", cfg.solver.n_R},
                      {"R_length", cfg.solver.R_length},
                      {"tau_grid", cfg.solver.tau_grid}};
    root["spin_wave"] = {{"enabled", cfg.spin_wave.enabled},
                         {"cm_center", cfg.spin_wave.cm_center},
                         {"cm_width", cfg.spin_wave.cm_width},
                         {"rel_offset", cfg.spin_wave.rel_offset},
                         {"rel_state", cfg.spin_wave.rel_state}};
    root["design"] = {{"c_lambda", cfg.design.c_lambda}, {"beta", cfg.design.beta}};
    root["density"] = cfg.density;
    root["output_dir"] = cfg.output_dir;
    root["seed"] = cfg.seed;
    json axes = json::array();
    for (const auto& a : cfg.axes) axes.push_back({{"name", a.name}, {"values", a.values}});
    root["axes"] = std::move(axes);
    return root.dump(2) + "\n";
}

std::vector<std::string> preset_names() {
    return {"fig2_sweep", "fig3_squarewell", "fig4_molecule", "fig4d_scaling"};
}

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig cfg;
    cfg.levels.gamma_prime = 1.0;

    if (name == "fig2_sweep") {
        // Correlated transparency of a uniformly interacting medium: sweep the
        // pair-interaction strength and the two-photon detuning. The stored
        // `u` is the pair energy shift; a shift -U moves the two-photon pair
        // resonance to delta = U.
        cfg.chain.count = 100;
        cfg.levels.gamma_1d = 2.0;
        cfg.levels.rabi_control = 2.0;
        cfg.drive.shape = DriveShape::Constant;
        cfg.drive.amplitude = 1e-2;
        cfg.potential = uniform_potential(-1.0);
        SweepAxis u_axis{"potential.u", {-0.5, -1.0, -2.0}};
        SweepAxis d_axis{"levels.two_photon_detuning", {}};
        for (int i = 0; i <= 30; ++i) d_axis.values.push_back(-0.5 + 0.1 * i);
        cfg.axes = {u_axis, d_axis};
    } else if (name == "fig3_squarewell") {
        // Finite-range square well: drive at the shifted pair resonance and
        // look at photon-photon correlations of the transmitted light.
        cfg.chain.count = 200;
        cfg.levels.gamma_1d = 1.0;
        cfg.levels.rabi_control = 2.0;
        cfg.levels.two_photon_detuning = 0.5;
        cfg.drive.shape = DriveShape::Constant;
        cfg.drive.amplitude = 1e-2;
        cfg.potential = square_well(-0.5, 50.0);
        for (int i = 0; i <= 200; ++i) cfg.solver.tau_grid.push_back(0.5 * i);
    } else if (name == "fig4_molecule" || name == "fig4d_scaling") {
        // Two-polariton molecule in the double-band-edge potential. The
        // two-photon detuning sits at the pair resonance of the potential
        // minimum, delta = -V(r0); the remaining single-photon detuning
        // carries the molecule detuning Delta_M = Delta + delta.
        const double xi = (name == "fig4_molecule") ? 1.0 : 1.0 / 3.0;
        const double g = 1.28 * xi, l_u = 15.0, l_l = 30.0, c_lambda = 24000.0;
        const double delta_m = 1.5 * xi;
        const double omega = 1.5;
        const double loss_u =
            loss_rate(g, cooperativity_at_range(c_lambda, l_u, kProbeWavelength));
        const double loss_l =
            loss_rate(g, cooperativity_at_range(c_lambda, l_l, kProbeWavelength));
        cfg.potential = double_band_edge(g, l_u, l_l, loss_u + loss_l);
        const PotentialExtremum ext = potential_extremum(cfg.potential);
        const double v0 = evaluate(cfg.potential, ext.r0);

        cfg.chain.count = 100;
        cfg.levels.gamma_1d = 2.0;
        cfg.levels.rabi_control = omega;
        cfg.levels.two_photon_detuning = -v0;
        cfg.levels.probe_detuning = delta_m + v0;
        cfg.drive.shape = DriveShape::Off;
        cfg.spin_wave.enabled = true;
        cfg.spin_wave.cm_center = 0.5 * (cfg.chain.count + 1);
        cfg.spin_wave.cm_width = 20.0;
        cfg.spin_wave.rel_offset = 5.0;
        cfg.spin_wave.rel_state = 0;
        cfg.solver.t_max = 120.0;
        cfg.solver.store_every = 50;
        cfg.design.c_lambda = c_lambda;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return cfg;
}

std::string preset_text(const std::string& name) { return serialize_config(preset(name)); }

void apply_axis_value(ScenarioConfig& cfg, const std::string& path, double value) {
    if (path == "levels.gamma_1d") cfg.levels.gamma_1d = value;
    else if (path == "levels.gamma_prime") cfg.levels.gamma_prime = value;
    else if (path == "levels.rabi_control") cfg.levels.rabi_control = value;
    else if (path == "levels.probe_detuning") cfg.levels.probe_detuning = value;
    else if (path == "levels.two_photon_detuning") cfg.levels.two_photon_detuning = value;
    else if (path == "drive.amplitude") cfg.drive.amplitude = value;
    else if (path == "potential.u") cfg.potential.u = value;
    else if (path == "potential.r_s") cfg.potential.r_s = value;
    else if (path == "potential.g") cfg.potential.g = value;
    else if (path == "potential.l") cfg.potential.l = value;
    else if (path == "potential.l_u") cfg.potential.l_u = value;
    else if (path == "potential.l_l") cfg.potential.l_l = value;
    else if (path == "potential.loss_rate_s") cfg.potential.loss_rate_s = value;
    else if (path == "density") cfg.density = value;
    else if (path == "solver.t_max") cfg.solver.t_max = value;
    else throw std::invalid_argument("apply_axis_value: unsupported path '" + path + "'");
}

}  // namespace wgqed
