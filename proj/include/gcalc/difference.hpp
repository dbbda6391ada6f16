#pragma once

/// \file
/// Geometric difference operators.
///
///   forward    D f(a) = f(a (+) h) (-) f(a)
///   backward   N f(a) = f(a) (-) f(a (-) h)
///   divided    f(x_0, x_1) = (f(x_1) (-) f(x_0)) (/) (x_1 (-) x_0)
///
/// Higher orders are iterated. Each operator is available both as a full
/// triangular table built by the recurrence and, where one exists, as a
/// closed-form sum used to cross-check the table.

#include <cstddef>
#include <span>
#include <vector>

#include "gcalc/gnum.hpp"
#include "gcalc/polynomial.hpp"

namespace gcalc {

struct GNode {
  GNum x;
  GNum f;
};

/// Nodes whose logarithms are closer than this are treated as coincident.
inline constexpr double kNodeSeparation = 1e-12;

/// Throws DuplicateNodes if any two abscissae coincide. O(n^2); does not
/// require any ordering.
void require_distinct(std::span<const GNode> nodes);

/// Tabulated function with strictly increasing, pairwise distinct
/// abscissae. Spacing is arbitrary.
class GTable {
 public:
  GTable() = default;
  /// Throws DuplicateNodes or UnsortedNodes.
  explicit GTable(std::vector<GNode> nodes);

  std::span<const GNode> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  const GNode& operator[](std::size_t i) const { return nodes_[i]; }

 private:
  std::vector<GNode> nodes_;
};

/// Relative tolerance on log spacing for a table to count as equispaced.
inline constexpr double kUniformSpacingTolerance = 1e-9;

/// Values on the geometric grid x_k = x_0 (+) e^k (*) h, i.e. with
/// ln x_k = ln x_0 + k ln h.
class UniformGrid {
 public:
  /// Throws StepIsZero for h = 1 and DomainError for an empty value list.
  UniformGrid(GNum x0, GNum h, std::vector<GNum> values);

  /// Throws NotUniform unless the table has >= 2 nodes whose log spacing
  /// is constant to kUniformSpacingTolerance (relative).
  static UniformGrid from_table(const GTable& table);

  GNum x0() const noexcept { return x0_; }
  GNum step() const noexcept { return h_; }
  std::span<const GNum> values() const noexcept { return values_; }
  std::size_t last_index() const noexcept { return values_.size() - 1; }
  GNum node(std::size_t k) const;
  /// Nodes in increasing order, so reversed when h < 1.
  GTable to_table() const;

 private:
  GNum x0_;
  GNum h_;
  std::vector<GNum> values_;
};

enum class DifferenceKind { Forward, Backward, Divided };

/// rows[0] holds the input values and rows[k] has one entry fewer than
/// rows[k-1]. Forward and divided entries rows[k][i] belong to the node
/// run starting at i. Backward entries rows[k][i] are N^k f(x_{i+k}),
/// i.e. they are anchored at the last node of the run.
struct TriangularTable {
  DifferenceKind kind = DifferenceKind::Forward;
  std::vector<std::vector<GNum>> rows;

  std::size_t order() const noexcept { return rows.empty() ? 0 : rows.size() - 1; }
};

TriangularTable forward_table(const UniformGrid& grid, std::size_t max_order);
TriangularTable forward_table(const UniformGrid& grid);

/// D^n f(x_i) = sum_k (-e)^{k_G} (*) e^{C(n,k)} (*) f(x_i (+) e^{n-k} (*) h).
GNum forward_direct(const UniformGrid& grid, std::size_t n, std::size_t i);

TriangularTable backward_table(const UniformGrid& grid, std::size_t max_order);
TriangularTable backward_table(const UniformGrid& grid);

/// N^n f(x_i) = sum_k (-e)^{k_G} (*) e^{C(n,k)} (*) f(x_i (-) e^k (*) h).
GNum backward_direct(const UniformGrid& grid, std::size_t n, std::size_t i);

/// Full divided-difference triangle. Nodes may come in any order but
/// must be distinct.
TriangularTable divided_table(std::span<const GNode> nodes);
TriangularTable divided_table(const GTable& table);

/// Top divided difference from the symmetric form
/// sum_i f(x_i) (/) prod_{j != i} (x_i (-) x_j).
GNum divided_symmetric(std::span<const GNode> nodes);

/// Same, with the order stated explicitly; throws IndexError unless
/// order == nodes.size() - 1.
GNum divided_symmetric(std::span<const GNode> nodes, std::size_t order);

/// f(x_0, ..., x_n) = D^n f(x_0) (/) (n!_G (*) h^{n_G}).
GNum dd_from_forward(const UniformGrid& grid, std::size_t n);

/// Divided difference with m+1 coincident arguments at x0:
/// (e (/) e^{m!}) (*) p^{(m_G)}(x0). Throws OrderTooHigh for m > degree.
GNum confluent_dd(const GPolynomial& p, GNum x0, std::size_t m);

}  // namespace gcalc
