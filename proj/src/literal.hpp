#pragma once

// Number-literal scanning shared by the expression lexer, the table
// reader and parse_gnum.

#include <cstddef>
#include <string_view>

#include "gcalc/error.hpp"
#include "gcalc/gnum.hpp"

namespace gcalc::detail {

/// Scans an unsigned decimal (digits, optional fraction, optional
/// exponent) starting at `pos`. Returns the end offset, or `pos` if no
/// decimal starts there.
std::size_t scan_decimal(std::string_view s, std::size_t pos);

/// Scans a decimal with an optional leading sign.
std::size_t scan_signed_decimal(std::string_view s, std::size_t pos);

/// Converts text already accepted by one of the scanners.
double decimal_to_double(std::string_view text);

/// Converts a full literal ("e^..." or a decimal) into a GNum. Throws
/// ParseError / NonPositiveValue.
GNum literal_to_gnum(std::string_view text);

}  // namespace gcalc::detail
