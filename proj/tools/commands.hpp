#pragma once

// Subcommand implementations for the gcalc CLI. Each returns the text to
// print and throws gcalc::Error on failure; main() maps errors to exit
// codes.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gcalc/difference.hpp"
#include "gcalc/error.hpp"

namespace gcalc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kDomainFailure = 3,
  kInputFailure = 4,
};

ExitCode exit_code_for(ErrorKind kind);

/// "error: <message>", followed by the source line and a caret marker when
/// the error has a span into `source`.
std::string describe_error(const Error& error, std::string_view source = {});

enum class OutputFormat { Text, Csv };
enum class InterpMethod { Divided, Lagrange, NewtonForward };

struct CommandOutput {
  std::string out;
  std::string err;
};

/// format_gnum, plus a value-domain annotation for the e^ form.
std::string format_annotated(GNum x, int precision);

std::string cmd_eval(std::string_view expr, int precision = 6);

std::string render_difftable(const GTable& table, DifferenceKind mode,
                             std::optional<std::size_t> order, OutputFormat format,
                             int precision = 6);

std::string cmd_difftable(const std::filesystem::path& input, DifferenceKind mode,
                          std::optional<std::size_t> order, OutputFormat format,
                          int precision = 6);

CommandOutput run_interp(const GTable& table, std::string_view at, InterpMethod method,
                         bool verbose, int precision = 6);

CommandOutput cmd_interp(const std::filesystem::path& input, std::string_view at,
                         InterpMethod method, bool verbose, int precision = 6);

/// `poly` is a comma-separated coefficient list, leading coefficient
/// first: "e,1,1,1" is x^{3_G}. A bare "e" is accepted for the unit in
/// both `poly` and `at`.
std::string cmd_derive(std::string_view poly, std::string_view at, int order,
                       int precision = 6);

/// One line per k = 0..n: "k!_G = e^<k!> = <value>".
std::string cmd_gfact(int n, int precision = 6);

}  // namespace gcalc::cli
