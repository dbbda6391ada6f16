#pragma once

// Reader for tabulated data files:
//
//   # comment lines start with '#'
//   x,f
//   e^0.12,0.903341
//   e^0.15,0.917534
//
// UTF-8, LF or CRLF line endings, header line `x,f`, then one `value,value`
// row per node. A value is a positive decimal or `e^` followed by a signed
// decimal. No quoting. Blank lines are skipped.

#include <filesystem>
#include <string_view>

#include "gcalc/difference.hpp"

namespace gcalc {

/// Throws FormatError (with line/field in the message and the byte span of
/// the offending text), DuplicateNodes or UnsortedNodes.
GTable read_table(std::string_view src);

/// Reads the file at `path`; an unreadable file is a FormatError.
GTable read_table_file(const std::filesystem::path& path);

}  // namespace gcalc
