#include "gcalc/interpolation.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "gcalc/error.hpp"

namespace gcalc {

namespace {

void require_nodes(std::size_t count) {
  if (count < 2) {
    throw Error(ErrorKind::DomainError,
                fmt::format("interpolation needs at least 2 nodes, got {}", count));
  }
}

bool outside(GNum x, GNum a, GNum b) {
  const double lo = std::min(a.log(), b.log());
  const double hi = std::max(a.log(), b.log());
  return x.log() < lo || x.log() > hi;
}

void add_term(Interpolation& out, GNum multiplier, GNum coefficient) {
  const GNum contribution = gmul(multiplier, coefficient);
  out.multipliers.push_back(multiplier);
  out.coefficients.push_back(coefficient);
  out.contributions.push_back(contribution);
  out.value = gadd(out.value, contribution);
}

}  // namespace

Interpolation interp_divided(const GTable& table, GNum x) {
  require_nodes(table.size());
  const auto nodes = table.nodes();
  const TriangularTable dd = divided_table(table);

  Interpolation out;
  out.extrapolated = outside(x, nodes.front().x, nodes.back().x);
  GNum product = GNum::unit();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    add_term(out, product, dd.rows[k].front());
    product = gmul(product, gsub(x, nodes[k].x));
  }
  return out;
}

Interpolation interp_newton_forward(const UniformGrid& grid, GNum x) {
  require_nodes(grid.values().size());
  const std::size_t n = grid.last_index();
  const TriangularTable differences = forward_table(grid);
  const GNum u = gdiv(gsub(x, grid.x0()), grid.step());

  Interpolation out;
  out.extrapolated = outside(x, grid.node(0), grid.node(n));
  GNum falling = GNum::unit();  // u (*) (u (-) e) (*) ... (*) (u (-) e^{k-1})
  for (std::size_t k = 0; k <= n; ++k) {
    add_term(out, gdiv(falling, gfactorial(static_cast<int>(k))), differences.rows[k].front());
    falling = gmul(falling, gsub(u, GNum::from_log(static_cast<double>(k))));
  }
  return out;
}

Interpolation interp_newton_forward(const GTable& table, GNum x) {
  return interp_newton_forward(UniformGrid::from_table(table), x);
}

Interpolation interp_lagrange(const GTable& table, GNum x) {
  require_nodes(table.size());
  const auto nodes = table.nodes();

  Interpolation out;
  out.extrapolated = outside(x, nodes.front().x, nodes.back().x);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    GNum numerator = GNum::unit();
    GNum denominator = GNum::unit();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      numerator = gmul(numerator, gsub(x, nodes[j].x));
      denominator = gmul(denominator, gsub(nodes[i].x, nodes[j].x));
    }
    add_term(out, gdiv(numerator, denominator), nodes[i].f);
  }
  return out;
}

GNum remainder(const GTable& table, GNum x, GNum true_value) {
  std::vector<GNode> extended(table.nodes().begin(), table.nodes().end());
  extended.push_back({x, true_value});
  const TriangularTable dd = divided_table(extended);

  GNum product = GNum::unit();
  for (const auto& node : table.nodes()) product = gmul(product, gsub(x, node.x));
  return gmul(product, dd.rows.back().front());
}

}  // namespace gcalc
