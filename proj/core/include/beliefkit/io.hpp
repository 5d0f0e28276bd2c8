#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

// Mass-function text format, one record per focal element:
//
//   # comment lines and blanks are ignored
//   frame: A B C
//   A: 0.1
//   A+B: 0.2
//   B+C: 0.3
//   A+B+C: 0.4
//
// Element labels joined by '+', '_' denotes the empty set. Printed masses
// carry up to 12 significant digits, so print -> parse -> print is stable.

std::string to_text(const MassFunction& m);

/// Syntax-level parse: frame header plus focal records, duplicates rejected.
/// Does not validate mass-function invariants (see validate()).
std::pair<FrameOfDiscernment, std::map<FocalSet, double>> parse_mass_entries(
    std::string_view text);

/// Parse and construct; throws ParseError on syntax errors and
/// std::invalid_argument when the records violate mass invariants.
MassFunction mass_from_text(std::string_view text);

MassFunction load_mass_file(const std::filesystem::path& path);
void save_mass_file(const std::filesystem::path& path, const MassFunction& m);

/// One-line rendering "A:0.1 A+B:0.2 ..." used for trace dumps.
std::string to_compact_line(const MassFunction& m);

/// Comma-separated decimals ("0.9,0.09,0.01") -> values. Throws ParseError.
std::vector<double> parse_decimal_list(std::string_view text);

/// %.{digits}g formatting (shortest round-trippable decimal at that width).
std::string format_significant(double value, int digits = 12);
/// %.{precision}f fixed formatting used by table output.
std::string format_fixed(double value, int precision);

/// Writes content to path via a temp file + rename, so failures never leave
/// partial output behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace beliefkit
