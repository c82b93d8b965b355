#pragma once

// Text formats shared by the library, the tests and the CLI.
//
// Plain grids: one line per row, northernmost row first; '.' or '0' is zero,
// 'O' or '1' is one, '2'..'9' are further symbols. Lines starting with '!' or
// '#' are comments. Ragged rows are zero-extended on the east.
//
// Life RLE (input only, binary): optional "x = .., y = .." header, run counts,
// 'b' (zero), 'o' (one), '$' (end of row) and '!' (end of pattern).
//
// Parsed patterns have their south-west corner at the origin.

#include <filesystem>
#include <string>
#include <string_view>

#include "lifetrace/ca.hpp"

namespace lifetrace {

enum class PatternFormat { Text, Rle };

Pattern parse_pattern(std::string_view text);
Pattern parse_plain_pattern(std::string_view text);
Pattern parse_rle_pattern(std::string_view text);

std::string format_pattern(const Pattern& p, PatternFormat format = PatternFormat::Text);

Pattern read_pattern_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);
std::string read_text_file(const std::filesystem::path& path);

// Rule files. Life is built in; other rules use a small line format:
//
//   alphabet 2
//   radius 1
//   rule B36/S23            (binary outer-totalistic, counts exclude the center)
// or
//   table 0110...           (|A|^((2r+1)^2) output digits, in neighborhood-code order)
//
// '#' starts a comment.
LocalRule parse_rule(std::string_view text);
LocalRule read_rule_file(const std::filesystem::path& path);

}  // namespace lifetrace
