#pragma once

/// \file
/// Geometric interpolation: Newton's divided-difference form for
/// arbitrary spacing, the Newton-Gregory forward form on equispaced
/// grids, and Lagrange's form. All three build the same geometric
/// polynomial through the nodes, so they agree up to rounding.

#include <vector>

#include "gcalc/difference.hpp"
#include "gcalc/gnum.hpp"

namespace gcalc {

/// Result of an interpolation, with the terms whose geometric sum is the
/// value: contributions[k] = multipliers[k] (*) coefficients[k].
///
/// For the divided-difference form the coefficients are f(x_0, ..., x_k)
/// and the multipliers (x (-) x_0) (*) ... (*) (x (-) x_{k-1}). For
/// Newton-Gregory they are D^k f(x_0) and u (*) (u (-) e) ... (/) k!_G. For
/// Lagrange they are the ordinates y_i and the basis weights.
struct Interpolation {
  GNum value;
  /// x lies outside the node range.
  bool extrapolated = false;
  std::vector<GNum> multipliers;
  std::vector<GNum> coefficients;
  std::vector<GNum> contributions;
};

Interpolation interp_divided(const GTable& table, GNum x);

Interpolation interp_newton_forward(const UniformGrid& grid, GNum x);

/// Converts the table with UniformGrid::from_table first, so unequally
/// spaced data is refused with NotUniform.
Interpolation interp_newton_forward(const GTable& table, GNum x);

Interpolation interp_lagrange(const GTable& table, GNum x);

/// Exact remainder R_n = (x (-) x_0) (*) ... (*) (x (-) x_n) (*) f(x, x_0, ..., x_n)
/// of the divided-difference form, where the top divided difference comes
/// from the table extended by (x, true_value). Throws DuplicateNodes when
/// x is one of the nodes.
GNum remainder(const GTable& table, GNum x, GNum true_value);

}  // namespace gcalc
