#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wgqed/config.hpp"

namespace wgqed {

struct SweepRow {
    std::vector<double> axis_values;  // lexicographic order over the axes
    std::vector<double> results;
    bool failed = false;
    std::string error;
};

struct SweepResult {
    std::vector<std::string> axis_names;
    std::vector<std::string> result_names;
    std::vector<SweepRow> rows;  // canonical (lexicographic) order
};

// Runs `evaluate` on every grid point of the config's axes (up to 2).
// Results are identical regardless of worker count; failed points are
// flagged and the sweep continues.
SweepResult run_sweep(
    const ScenarioConfig& base, const std::vector<std::string>& result_names,
    const std::function<std::vector<double>(const ScenarioConfig&)>& evaluate,
    int workers = 1);

std::string sweep_to_csv(const SweepResult& result);

}  // namespace wgqed
