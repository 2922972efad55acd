#include "wgqed/io.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wgqed {

std::string format_double(double value) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                         std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string format_complex_pair(Complex value) {
    return format_double(value.real()) + "," + format_double(value.imag());
}

void write_text_file(const std::string& path, const std::string& contents) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
    out << contents;
    if (!out) throw std::runtime_error("write_text_file: write failed for " + path);
}

std::string matrix_to_text(const Eigen::MatrixXd& m) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string complex_table(const std::vector<double>& grid, const VectorXc& values) {
    if (static_cast<Eigen::Index>(grid.size()) != values.size())
        throw std::invalid_argument("complex_table: grid/value size mismatch");
    std::ostringstream out;
    out << "x,re,im\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << format_double(grid[i]) << ','
            << format_complex_pair(values(static_cast<Eigen::Index>(i))) << '\n';
    return out.str();
}

void write_manifest(const std::string& path, const std::string& resolved_config_json,
                    const std::string& subcommand, double wall_seconds) {
    nlohmann::json manifest;
    manifest["version"] = kVersion;
    manifest["subcommand"] = subcommand;
    manifest["wall_seconds"] = wall_seconds;
    manifest["resolved_config"] = nlohmann::json::parse(resolved_config_json);
    const auto now = std::chrono::system_clock::now();
    manifest["completed_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    write_text_file(path, manifest.dump(2) + "\n");
}

}  // namespace wgqed
