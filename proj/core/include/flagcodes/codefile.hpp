#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagcodes/flag_code.hpp"

namespace flagcodes {

// Line-oriented text format, one record per line:
//
//   flagcode v1
//   q=<int> n=<int> type=<t1,...,tr> flags=<count>
//   flag 1
//   <t_r rows of n element encodings>      first t_i rows span F_i
//   flag 2
//   ...
//
// Received (stuttering) flags use `rows=<d1,...,dr>` in place of `type=` and
// give, per flag, d_1 rows spanning X_1, then d_2 rows spanning X_2, and so on.
// A flag block may also be written `flag <k> levels` followed by a basis of
// every level in turn (t_1 + ... + t_r rows); the serializer always emits the
// generator layout. Blank lines and lines starting with '#' are ignored.
// Errors are reported as ParseError with a 1-based line number.

FlagCode parse_code(std::string_view text);
std::string serialize_code(const FlagCode& code);

std::vector<StutteringFlag> parse_received(std::string_view text);
std::string serialize_received(std::span<const StutteringFlag> received);

/// Reads a whole file. Throws IoError.
std::string read_file(const std::filesystem::path& path);
FlagCode load_code(const std::filesystem::path& path);
std::vector<StutteringFlag> load_received(const std::filesystem::path& path);

}  // namespace flagcodes
