#include "text_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "csm/error.hpp"

namespace csm::detail {

std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t       number = 0;
  std::size_t       pos    = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line        line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size()
             && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) {
        ++i;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t'
             && raw[i] != '\r') {
        ++i;
      }
      if (i > start) {
        line.tokens.emplace_back(raw.substr(start, i - start));
      }
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return lines;
}

std::int64_t parse_integer(std::string const& token, std::string_view what) {
  std::int64_t value = 0;
  char const*  first = token.data();
  char const*  last  = token.data() + token.size();
  if (first != last && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::malformed_input,
                "expected an integer for " + std::string(what) + ", got '"
                    + token + "'");
  }
  return value;
}

std::uint64_t parse_unsigned(std::string const& token, std::string_view what) {
  std::int64_t value = parse_integer(token, what);
  if (value < 0) {
    throw Error(ErrorKind::malformed_input,
                "expected a non-negative integer for " + std::string(what)
                    + ", got '" + token + "'");
  }
  return static_cast<std::uint64_t>(value);
}

void malformed(std::size_t line, std::string const& message) {
  throw Error(ErrorKind::malformed_input,
              "line " + std::to_string(line) + ": " + message);
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::malformed_input, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::malformed_input,
                "cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace csm::detail
