#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace gcalc;

int main(int argc, char** argv) {
  CLI::App app{"gcalc: geometric arithmetic, differences, interpolation and G-derivatives"};
  app.require_subcommand(1);

  int precision = 6;
  app.add_option("--precision", precision, "Decimal places in printed values")
      ->check(CLI::Range(0, 17));

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a geometric expression");
  eval->add_option("expr", expr, "Expression, e.g. \"e^2 .+ 3 .* gfact(3)\"")->required();

  const std::map<std::string, DifferenceKind> modes{
      {"forward", DifferenceKind::Forward},
      {"backward", DifferenceKind::Backward},
      {"divided", DifferenceKind::Divided}};
  const std::map<std::string, cli::OutputFormat> formats{
      {"text", cli::OutputFormat::Text}, {"csv", cli::OutputFormat::Csv}};
  const std::map<std::string, cli::InterpMethod> methods{
      {"divided", cli::InterpMethod::Divided},
      {"lagrange", cli::InterpMethod::Lagrange},
      {"newton-forward", cli::InterpMethod::NewtonForward}};

  std::string input;
  DifferenceKind mode = DifferenceKind::Divided;
  std::optional<std::size_t> table_order;
  cli::OutputFormat format = cli::OutputFormat::Text;
  auto* difftable = app.add_subcommand("difftable", "Print a difference table");
  difftable->add_option("--input", input, "Table file (header x,f)")->required();
  difftable->add_option("--mode", mode, "forward, backward or divided")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  difftable->add_option("--order", table_order, "Highest order to print");
  difftable->add_option("--format", format, "text or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string at;
  cli::InterpMethod method = cli::InterpMethod::Divided;
  bool verbose = false;
  auto* interp = app.add_subcommand("interp", "Interpolate a table at a point");
  interp->add_option("--input", input, "Table file (header x,f)")->required();
  interp->add_option("--at", at, "Point, decimal or e^<log>")->required();
  interp->add_option("--method", method, "divided, lagrange or newton-forward")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  interp->add_flag("--verbose", verbose, "Print each term of the geometric sum");

  std::string poly;
  int deriv_order = 1;
  auto* derive = app.add_subcommand("derive", "Exact G-derivative of a geometric polynomial");
  derive->add_option("poly", poly, "Coefficients, leading first: \"e,1,1,1\" is x^{3_G}")
      ->required();
  derive->add_option("--at", at, "Point, decimal or e^<log>")->required();
  derive->add_option("--order", deriv_order, "Derivative order")->check(CLI::NonNegativeNumber);

  int fact_n = 0;
  auto* gfact = app.add_subcommand("gfact", "Geometric factorials k!_G = e^{k!} for k = 0..N");
  gfact->add_option("n", fact_n, "Largest k")->required()->check(CLI::NonNegativeNumber);

  // Options after the subcommand name apply too.
  for (auto* sub : {eval, difftable, interp, derive, gfact}) {
    sub->add_option("--precision", precision, "Decimal places in printed values")
        ->check(CLI::Range(0, 17));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kUsage;
  }

  std::string_view source;
  try {
    if (eval->parsed()) {
      source = expr;
      std::cout << cli::cmd_eval(expr, precision);
    } else if (difftable->parsed()) {
      std::cout << cli::cmd_difftable(input, mode, table_order, format, precision);
    } else if (interp->parsed()) {
      const auto result = cli::cmd_interp(input, at, method, verbose, precision);
      std::cerr << result.err;
      std::cout << result.out;
    } else if (derive->parsed()) {
      std::cout << cli::cmd_derive(poly, at, deriv_order, precision);
    } else if (gfact->parsed()) {
      std::cout << cli::cmd_gfact(fact_n, precision);
    }
  } catch (const Error& e) {
    std::cerr << cli::describe_error(e, source);
    return cli::exit_code_for(e.kind());
  }
  return cli::kOk;
}
