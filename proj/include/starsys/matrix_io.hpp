#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <starsys/cmat.hpp>

namespace starsys {

// Text format: "rows cols" on the first line, then one line per row with
// `(re,im)` tokens separated by whitespace. Trailing blank lines are ignored.

/// Throws ParseError with 1-based line and column of the offending token.
CMat parse_matrix(std::istream& in);
CMat parse_matrix_string(const std::string& text);
/// Throws Error if the file cannot be opened.
CMat read_matrix(const std::filesystem::path& path);

/// 17 significant digits, so read_matrix(write_matrix(A)) == A bit-exactly.
void write_matrix(std::ostream& out, const CMat& a);
std::string format_matrix(const CMat& a);
void write_matrix(const std::filesystem::path& path, const CMat& a);

}  // namespace starsys
