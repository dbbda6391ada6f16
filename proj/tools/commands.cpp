#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "gcalc/derivative.hpp"
#include "gcalc/expression.hpp"
#include "gcalc/interpolation.hpp"
#include "gcalc/polynomial.hpp"
#include "gcalc/table_file.hpp"

namespace gcalc::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string_view column_label(DifferenceKind mode) {
  switch (mode) {
    case DifferenceKind::Forward: return "D";
    case DifferenceKind::Backward: return "N";
    case DifferenceKind::Divided: return "DD";
  }
  return "?";
}

// Like parse_gnum, but also accepts a bare "e" for the geometric unit.
GNum parse_value(std::string_view text) {
  return text == "e" ? GNum::unit() : parse_gnum(text);
}

// Node index an entry of `rows[order]` belongs to in CSV output.
std::size_t anchor(DifferenceKind mode, std::size_t order, std::size_t i) {
  return mode == DifferenceKind::Backward ? i + order : i;
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LexError:
    case ErrorKind::ParseError:
      return kParseFailure;
    case ErrorKind::FormatError:
    case ErrorKind::DuplicateNodes:
    case ErrorKind::UnsortedNodes:
    case ErrorKind::NotUniform:
      return kInputFailure;
    default:
      return kDomainFailure;
  }
}

std::string describe_error(const Error& error, std::string_view source) {
  const std::string_view label = to_string(error.kind());
  const std::string_view message = error.what();
  std::string out = message.starts_with(label) ? fmt::format("error: {}\n", message)
                                               : fmt::format("error: {}: {}\n", label, message);
  const auto& span = error.span();
  if (span && !source.empty() && span->begin <= source.size()) {
    const std::size_t width = std::max<std::size_t>(1, span->end - span->begin);
    out += fmt::format("  {}\n  {}{}\n", source, std::string(span->begin, ' '),
                       std::string(width, '^'));
  }
  return out;
}

std::string format_annotated(GNum x, int precision) {
  std::string text = format_gnum(x, precision);
  if (std::abs(x.log()) > kDecimalFormLimit) {
    const double value = x.value();
    if (std::isfinite(value) && value > 0.0) text += fmt::format(" (~{:.5e})", value);
  }
  return text;
}

std::string cmd_eval(std::string_view expr, int precision) {
  return format_annotated(evaluate(*parse(expr)), precision) + "\n";
}

std::string render_difftable(const GTable& table, DifferenceKind mode,
                             std::optional<std::size_t> order, OutputFormat format,
                             int precision) {
  TriangularTable tri;
  if (mode == DifferenceKind::Divided) {
    tri = divided_table(table);
    if (order) {
      if (*order > tri.order()) {
        throw Error(ErrorKind::OrderTooHigh,
                    fmt::format("order {} needs {} nodes, table has {}", *order, *order + 1,
                                table.size()));
      }
      tri.rows.resize(*order + 1);
    }
  } else {
    const UniformGrid grid = UniformGrid::from_table(table);
    const std::size_t max_order = order.value_or(grid.last_index());
    tri = mode == DifferenceKind::Forward ? forward_table(grid, max_order)
                                          : backward_table(grid, max_order);
  }

  std::string out;
  if (format == OutputFormat::Csv) {
    out += "order,index,value\n";
    for (std::size_t k = 0; k < tri.rows.size(); ++k) {
      for (std::size_t i = 0; i < tri.rows[k].size(); ++i) {
        out += fmt::format("{},{},{}\n", k, anchor(mode, k, i),
                           format_gnum(tri.rows[k][i], precision));
      }
    }
    return out;
  }

  // Staggered layout: node i sits on line 2i, and the order-k entry
  // computed from nodes i..i+k sits on line 2i+k, between its end nodes.
  const auto label = column_label(mode);
  std::vector<std::string> header{"x", "f(x)"};
  for (std::size_t k = 1; k < tri.rows.size(); ++k) header.push_back(fmt::format("{}^{}", label, k));

  const std::size_t lines = 2 * table.size() - 1;
  std::vector<std::vector<std::string>> grid(lines, std::vector<std::string>(header.size()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    grid[2 * i][0] = format_exp_form(table[i].x, precision);
  }
  for (std::size_t k = 0; k < tri.rows.size(); ++k) {
    for (std::size_t i = 0; i < tri.rows[k].size(); ++i) {
      grid[2 * i + k][k + 1] = format_gnum(tri.rows[k][i], precision);
    }
  }

  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& row : grid) widths[c] = std::max(widths[c], row[c].size());
  }
  auto emit_row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += "  ";
      line += fmt::format("{:<{}}", cells[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit_row(header);
  for (const auto& row : grid) emit_row(row);
  return out;
}

std::string cmd_difftable(const std::filesystem::path& input, DifferenceKind mode,
                          std::optional<std::size_t> order, OutputFormat format,
                          int precision) {
  return render_difftable(read_table_file(input), mode, order, format, precision);
}

CommandOutput run_interp(const GTable& table, std::string_view at, InterpMethod method,
                         bool verbose, int precision) {
  const GNum x = parse_gnum(trim(at));
  Interpolation result;
  switch (method) {
    case InterpMethod::Divided: result = interp_divided(table, x); break;
    case InterpMethod::Lagrange: result = interp_lagrange(table, x); break;
    case InterpMethod::NewtonForward: result = interp_newton_forward(table, x); break;
  }

  CommandOutput output;
  if (result.extrapolated) {
    output.err = fmt::format("warning: {} lies outside the node range; extrapolating\n",
                             format_exp_form(x, precision));
  }
  if (verbose) {
    for (std::size_t k = 0; k < result.contributions.size(); ++k) {
      output.out += fmt::format("term {}: {} (*) {} = {}\n", k,
                                format_exp_form(result.multipliers[k], precision),
                                format_gnum(result.coefficients[k], precision),
                                format_gnum(result.contributions[k], precision));
    }
  }
  output.out += format_annotated(result.value, precision) + "\n";
  return output;
}

CommandOutput cmd_interp(const std::filesystem::path& input, std::string_view at,
                         InterpMethod method, bool verbose, int precision) {
  return run_interp(read_table_file(input), at, method, verbose, precision);
}

std::string cmd_derive(std::string_view poly, std::string_view at, int order, int precision) {
  if (order < 0) throw Error(ErrorKind::DomainError, "derivative order must be >= 0");
  std::vector<GNum> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = poly.find(',', pos);
    const auto field = trim(poly.substr(pos, comma == std::string_view::npos ? poly.npos
                                                                               : comma - pos));
    if (field.empty()) {
      throw Error(ErrorKind::ParseError,
                  fmt::format("empty coefficient in polynomial '{}'", poly),
                  Span{pos, pos});
    }
    coeffs.push_back(parse_value(field));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const GPolynomial p(std::move(coeffs));
  const GNum x = parse_value(trim(at));
  return format_annotated(gderiv_nth(p, x, order), precision) + "\n";
}

std::string cmd_gfact(int n, int precision) {
  if (n < 0) throw Error(ErrorKind::DomainError, "factorial of a negative integer");
  std::string out;
  for (int k = 0; k <= n; ++k) {
    const GNum f = gfactorial(k);
    const std::string value = std::abs(f.log()) <= kDecimalFormLimit
                                  ? "= " + format_gnum(f, precision)
                                  : fmt::format("~ {:.5e}", f.value());
    out += fmt::format("{}!_G = {} {}\n", k, format_exp_form(f, precision), value);
  }
  return out;
}

}  // namespace gcalc::cli
