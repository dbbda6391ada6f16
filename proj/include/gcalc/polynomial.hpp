#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gcalc/gnum.hpp"

namespace gcalc {

/// Geometric polynomial
///
///     a_0 (*) x^{n_G} (+) a_1 (*) x^{(n-1)_G} (+) ... (+) a_n
///
/// with the leading coefficient first. In the log domain this is the
/// ordinary polynomial sum_k ln(a_k) u^{n-k} evaluated at u = ln x, which
/// is a transcendental function of x in ordinary arithmetic.
class GPolynomial {
 public:
  /// Throws DomainError for an empty list or a geometric-zero leading
  /// coefficient on a polynomial of positive degree.
  explicit GPolynomial(std::vector<GNum> coeffs);

  /// x^{n_G}.
  static GPolynomial monomial(int degree);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const GNum> coeffs() const noexcept { return coeffs_; }
  GNum leading() const noexcept { return coeffs_.front(); }

  /// Horner's scheme under the geometric operations.
  GNum operator()(GNum x) const;

 private:
  std::vector<GNum> coeffs_;
};

}  // namespace gcalc
