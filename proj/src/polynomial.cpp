#include "gcalc/polynomial.hpp"

#include <fmt/format.h>

#include "gcalc/error.hpp"

namespace gcalc {

GPolynomial::GPolynomial(std::vector<GNum> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::DomainError, "a polynomial needs at least one coefficient");
  }
  if (coeffs_.size() > 1 && coeffs_.front() == GNum::zero()) {
    throw Error(ErrorKind::DomainError,
                fmt::format("leading coefficient of a degree-{} polynomial is the "
                            "geometric zero",
                            coeffs_.size() - 1));
  }
}

GPolynomial GPolynomial::monomial(int degree) {
  if (degree < 0) throw Error(ErrorKind::DomainError, "negative polynomial degree");
  std::vector<GNum> coeffs(static_cast<std::size_t>(degree) + 1, GNum::zero());
  coeffs.front() = GNum::unit();
  return GPolynomial(std::move(coeffs));
}

GNum GPolynomial::operator()(GNum x) const {
  GNum acc = coeffs_.front();
  for (std::size_t k = 1; k < coeffs_.size(); ++k) acc = gadd(gmul(acc, x), coeffs_[k]);
  return acc;
}

}  // namespace gcalc
