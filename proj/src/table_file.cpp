#include "gcalc/table_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "gcalc/error.hpp"
#include "literal.hpp"

namespace gcalc {

namespace {

// Trims spaces and tabs, adjusting `offset` to the start of what remains.
std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

GNum parse_field(std::string_view text, std::size_t offset, std::size_t line,
                 std::size_t field) {
  const Span span{offset, offset + text.size()};
  if (text.empty()) {
    throw Error(ErrorKind::FormatError,
                fmt::format("line {}, field {}: empty value", line, field), span);
  }
  try {
    return detail::literal_to_gnum(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::FormatError,
                fmt::format("line {}, field {}: {}", line, field, e.what()), span);
  }
}

}  // namespace

GTable read_table(std::string_view src) {
  std::vector<GNode> nodes;
  bool seen_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos < src.size()) {
    ++line_no;
    const std::size_t newline = src.find('\n', pos);
    const std::size_t line_end = newline == std::string_view::npos ? src.size() : newline;
    std::string_view line = src.substr(pos, line_end - pos);
    const std::size_t line_start = pos;
    pos = newline == std::string_view::npos ? src.size() : newline + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t offset = line_start;
    const std::string_view content = trim(line, offset);
    if (content.empty() || content.front() == '#') continue;

    if (!seen_header) {
      if (content != "x,f") {
        throw Error(ErrorKind::FormatError,
                    fmt::format("line {}: expected header 'x,f', found '{}'", line_no, content),
                    Span{offset, offset + content.size()});
      }
      seen_header = true;
      continue;
    }

    const std::size_t comma = content.find(',');
    if (comma == std::string_view::npos || content.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorKind::FormatError,
                  fmt::format("line {}: expected exactly two comma-separated values", line_no),
                  Span{offset, offset + content.size()});
    }
    std::size_t x_offset = offset;
    std::size_t f_offset = offset + comma + 1;
    const auto x_text = trim(content.substr(0, comma), x_offset);
    const auto f_text = trim(content.substr(comma + 1), f_offset);
    nodes.push_back({parse_field(x_text, x_offset, line_no, 1),
                     parse_field(f_text, f_offset, line_no, 2)});
  }

  if (!seen_header) throw Error(ErrorKind::FormatError, "missing header line 'x,f'");
  if (nodes.empty()) throw Error(ErrorKind::FormatError, "table has no data rows");
  return GTable(std::move(nodes));
}

GTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::FormatError, fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_table(buffer.str());
}

}  // namespace gcalc
