#include "gcalc/difference.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gcalc/derivative.hpp"
#include "gcalc/error.hpp"

namespace gcalc {

namespace {

bool coincide(GNum a, GNum b) { return std::abs(a.log() - b.log()) < kNodeSeparation; }

// (-e)^{k_G}: log (-1)^k.
GNum alternating_sign(std::size_t k) {
  return gpow_int(gneg(GNum::unit()), static_cast<std::int64_t>(k));
}

GNum binomial(std::size_t n, std::size_t k) {
  return gbinom_coeff(static_cast<int>(n), static_cast<int>(k));
}

void check_order(const UniformGrid& grid, std::size_t max_order) {
  if (max_order > grid.last_index()) {
    throw Error(ErrorKind::OrderTooHigh,
                fmt::format("order {} needs at least {} values, grid has {}", max_order,
                            max_order + 1, grid.values().size()));
  }
}

std::vector<std::vector<GNum>> difference_rows(std::span<const GNum> values,
                                               std::size_t max_order) {
  std::vector<std::vector<GNum>> rows;
  rows.reserve(max_order + 1);
  rows.emplace_back(values.begin(), values.end());
  for (std::size_t k = 0; k < max_order; ++k) {
    const auto& prev = rows.back();
    std::vector<GNum> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(gsub(prev[i + 1], prev[i]));
    rows.push_back(std::move(next));
  }
  return rows;
}

}  // namespace

void require_distinct(std::span<const GNode> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (coincide(nodes[i].x, nodes[j].x)) {
        throw Error(ErrorKind::DuplicateNodes,
                    fmt::format("nodes {} and {} coincide (ln x = {})", i, j,
                                nodes[i].x.log()));
      }
    }
  }
}

GTable::GTable(std::vector<GNode> nodes) : nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const double gap = nodes_[i + 1].x.log() - nodes_[i].x.log();
    if (std::abs(gap) < kNodeSeparation) {
      throw Error(ErrorKind::DuplicateNodes,
                  fmt::format("nodes {} and {} coincide (ln x = {})", i, i + 1,
                              nodes_[i].x.log()));
    }
    if (gap < 0.0) {
      throw Error(ErrorKind::UnsortedNodes,
                  fmt::format("node {} is not greater than node {}", i + 1, i));
    }
  }
}

UniformGrid::UniformGrid(GNum x0, GNum h, std::vector<GNum> values)
    : x0_(x0), h_(h), values_(std::move(values)) {
  if (h_ == GNum::zero()) {
    throw Error(ErrorKind::StepIsZero, "grid step is the geometric zero");
  }
  if (values_.empty()) throw Error(ErrorKind::DomainError, "grid has no values");
}

UniformGrid UniformGrid::from_table(const GTable& table) {
  if (table.size() < 2) {
    throw Error(ErrorKind::NotUniform, "an equispaced grid needs at least two nodes");
  }
  const auto nodes = table.nodes();
  const double first = nodes[1].x.log() - nodes[0].x.log();
  for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
    const double gap = nodes[k + 1].x.log() - nodes[k].x.log();
    if (std::abs(gap - first) > kUniformSpacingTolerance * std::abs(first)) {
      throw Error(ErrorKind::NotUniform,
                  fmt::format("log spacing {} between nodes {} and {} differs from {}", gap,
                              k, k + 1, first));
    }
  }
  const double span = nodes.back().x.log() - nodes.front().x.log();
  std::vector<GNum> values;
  values.reserve(nodes.size());
  for (const auto& node : nodes) values.push_back(node.f);
  return UniformGrid(nodes.front().x,
                     GNum::from_log(span / static_cast<double>(nodes.size() - 1)),
                     std::move(values));
}

GNum UniformGrid::node(std::size_t k) const {
  return gadd(x0_, gmul(GNum::from_log(static_cast<double>(k)), h_));
}

GTable UniformGrid::to_table() const {
  std::vector<GNode> nodes;
  nodes.reserve(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) nodes.push_back({node(k), values_[k]});
  if (h_.log() < 0) std::reverse(nodes.begin(), nodes.end());
  return GTable(std::move(nodes));
}

TriangularTable forward_table(const UniformGrid& grid, std::size_t max_order) {
  check_order(grid, max_order);
  return {DifferenceKind::Forward, difference_rows(grid.values(), max_order)};
}

TriangularTable forward_table(const UniformGrid& grid) {
  return forward_table(grid, grid.last_index());
}

GNum forward_direct(const UniformGrid& grid, std::size_t n, std::size_t i) {
  if (i > grid.last_index() || n > grid.last_index() - i) {
    throw Error(ErrorKind::OrderTooHigh,
                fmt::format("forward difference of order {} at node {} runs past node {}", n,
                            i, grid.last_index()));
  }
  const auto values = grid.values();
  GNum sum;
  for (std::size_t k = 0; k <= n; ++k) {
    sum = gadd(sum, gmul(gmul(alternating_sign(k), binomial(n, k)), values[i + n - k]));
  }
  return sum;
}

TriangularTable backward_table(const UniformGrid& grid, std::size_t max_order) {
  check_order(grid, max_order);
  return {DifferenceKind::Backward, difference_rows(grid.values(), max_order)};
}

TriangularTable backward_table(const UniformGrid& grid) {
  return backward_table(grid, grid.last_index());
}

GNum backward_direct(const UniformGrid& grid, std::size_t n, std::size_t i) {
  if (i > grid.last_index() || n > i) {
    throw Error(ErrorKind::OrderTooHigh,
                fmt::format("backward difference of order {} at node {} runs before node 0",
                            n, i));
  }
  const auto values = grid.values();
  GNum sum;
  for (std::size_t k = 0; k <= n; ++k) {
    sum = gadd(sum, gmul(gmul(alternating_sign(k), binomial(n, k)), values[i - k]));
  }
  return sum;
}

TriangularTable divided_table(std::span<const GNode> nodes) {
  if (nodes.empty()) throw Error(ErrorKind::DomainError, "divided differences need a node");
  require_distinct(nodes);
  TriangularTable table{DifferenceKind::Divided, {}};
  table.rows.reserve(nodes.size());
  auto& first = table.rows.emplace_back();
  for (const auto& node : nodes) first.push_back(node.f);
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const auto& prev = table.rows[k];
    std::vector<GNum> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      next.push_back(gdiv(gsub(prev[i + 1], prev[i]), gsub(nodes[i + k + 1].x, nodes[i].x)));
    }
    table.rows.push_back(std::move(next));
  }
  return table;
}

TriangularTable divided_table(const GTable& table) { return divided_table(table.nodes()); }

GNum divided_symmetric(std::span<const GNode> nodes) {
  if (nodes.empty()) throw Error(ErrorKind::DomainError, "divided differences need a node");
  require_distinct(nodes);
  GNum sum;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    GNum denominator = GNum::unit();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != i) denominator = gmul(denominator, gsub(nodes[i].x, nodes[j].x));
    }
    sum = gadd(sum, gdiv(nodes[i].f, denominator));
  }
  return sum;
}

GNum divided_symmetric(std::span<const GNode> nodes, std::size_t order) {
  if (order + 1 != nodes.size()) {
    throw Error(ErrorKind::IndexError,
                fmt::format("order {} divided difference needs {} nodes, got {}", order,
                            order + 1, nodes.size()));
  }
  return divided_symmetric(nodes);
}

GNum dd_from_forward(const UniformGrid& grid, std::size_t n) {
  check_order(grid, n);
  const GNum delta = forward_table(grid, n).rows[n].front();
  const GNum scale =
      gmul(gfactorial(static_cast<int>(n)), gpow_int(grid.step(), static_cast<std::int64_t>(n)));
  return gdiv(delta, scale);
}

GNum confluent_dd(const GPolynomial& p, GNum x0, std::size_t m) {
  if (m > p.degree()) {
    throw Error(ErrorKind::OrderTooHigh,
                fmt::format("confluent order {} exceeds polynomial degree {}", m, p.degree()));
  }
  const GNum scale = gdiv(GNum::unit(), gfactorial(static_cast<int>(m)));
  return gmul(scale, gderiv_nth(p, x0, static_cast<int>(m)));
}

}  // namespace gcalc
