#pragma once

#include <stdexcept>
#include <string>

#include "wallscale/field.hpp"
#include "wallscale/minimize.hpp"
#include "wallscale/sweep.hpp"

namespace wallscale {

inline constexpr const char* kToolVersion = "wallscale 1.0.0";

/// parse failure with position information; the CLI maps this to exit code 2
struct FileParseError : std::runtime_error {
  explicit FileParseError(const std::string& what) : std::runtime_error(what) {}
};

// Field files: one text header line
//   wallscale-field v1 L=<> n1=<> n3=<> t=<>
// followed by n1*n3 lines of "m1 m2 m3", row-major with x3 outer, x1 inner.
void write_field_file(const std::string& path, const MagnetizationField& field,
                      const std::string& config_comment = "");
MagnetizationField read_field_file(const std::string& path);

std::string field_to_string(const MagnetizationField& field);

/// sweep CSV with the fixed column order; the header embeds version, config
/// and seed as comment lines.  Byte-deterministic for identical inputs.
std::string sweep_table_csv(const SweepTable& table, const std::string& config_comment,
                            std::uint64_t seed);

std::string relax_trace_csv(const RelaxReport& report, const std::string& config_comment);

std::string crossover_csv(const std::vector<CrossoverResult>& results,
                          const std::string& config_comment, std::uint64_t seed);

/// E_min/(d t) against t/d, one polyline per Q, log10 vertical axis
std::string sweep_svg(const SweepTable& table, double d);

void write_text_file(const std::string& path, const std::string& content);
std::string format_double(double v);  // shared "%.12g" formatting

}  // namespace wallscale
