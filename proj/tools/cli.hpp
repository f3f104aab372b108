#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kfib/integer.hpp"

namespace kfib::cli {

enum class Format { plain, json, csv };

/// Parses "A..B" (inclusive, either end may be negative). Throws
/// std::invalid_argument on bad syntax or a reversed range.
IndexRange parse_range(const std::string& text);

/// Parses a comma-separated list of integers.
std::vector<Integer> parse_integer_list(const std::string& text);

Format parse_format(const std::string& text);

/// Runs the command line `args` (without the program name). Returns the
/// process exit code; all output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfib::cli
