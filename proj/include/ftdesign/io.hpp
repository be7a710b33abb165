#pragma once

#include <string>
#include <string_view>

#include "ftdesign/design.hpp"

namespace ftd
{

/// {"v": n, "blocks": [[1-based points], ...]}. Throws ErrorCode::parse_error.
IncidenceStructure design_from_json(std::string_view text);
std::string design_to_json(IncidenceStructure const &s);

/// A "degree n" line followed by one generator per line in cycle notation; '#' starts a
/// comment and blank lines are skipped.
std::vector<Permutation> parse_generators(std::string_view text);
std::string format_generators(std::size_t degree, std::vector<Permutation> const &gens);

/// Comma or whitespace separated 1-based points, braces optional; returned 0-based and sorted.
std::vector<Point> parse_point_set(std::string_view text, std::size_t degree);

/// Whole file, or standard input for "-". Throws ErrorCode::io_error.
std::string read_text(std::string const &path);

} // namespace ftd
