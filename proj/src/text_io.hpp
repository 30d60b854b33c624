#pragma once

// Line-oriented helpers shared by the file-format parsers.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csm::detail {

struct Line {
  std::size_t              number;  // 1-based, for diagnostics
  std::vector<std::string> tokens;
};

/// Splits \p text into lines, drops everything after '#', and keeps only
/// lines with at least one token. Accepts LF and CRLF.
std::vector<Line> tokenize_lines(std::string_view text);

/// Parses a decimal integer token (optionally signed). Throws
/// Error(malformed_input) mentioning \p what on failure.
std::int64_t parse_integer(std::string const& token, std::string_view what);

/// Like parse_integer but rejects negative values.
std::uint64_t parse_unsigned(std::string const& token, std::string_view what);

[[noreturn]] void malformed(std::size_t line, std::string const& message);

std::string read_file(std::string const& path);
void        write_file(std::string const& path, std::string const& content);

}  // namespace csm::detail
