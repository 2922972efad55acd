#pragma once

#include <string>
#include <vector>

#include "wgqed/state.hpp"

namespace wgqed {

// Bit-stable numeric formatting shared by every emitted file (max_digits10).
std::string format_double(double value);
std::string format_complex_pair(Complex value);  // "re,im"

void write_text_file(const std::string& path, const std::string& contents);

// Dense real matrix as whitespace-separated rows.
std::string matrix_to_text(const Eigen::MatrixXd& m);

// Grid + complex amplitude table: "x  re  im" per row.
std::string complex_table(const std::vector<double>& grid, const VectorXc& values);

// Run manifest: resolved parameters, code version, wall time.
void write_manifest(const std::string& path, const std::string& resolved_config_json,
                    const std::string& subcommand, double wall_seconds);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wgqed
