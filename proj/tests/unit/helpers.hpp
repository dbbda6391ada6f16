#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "gcalc/difference.hpp"
#include "gcalc/gnum.hpp"

namespace gcalc::testing {

/// Log-domain closeness, the natural metric for geometric values.
inline bool log_close(GNum a, GNum b, double tol = 1e-9) {
  return std::abs(a.log() - b.log()) <= tol;
}

inline bool log_close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

#define CHECK_LOG_CLOSE(a, b, tol)                                              \
  do {                                                                          \
    const auto lhs_ = (a);                                                      \
    const auto rhs_ = (b);                                                      \
    INFO("lhs log = " << lhs_.log() << ", rhs log = " << rhs_.log());           \
    CHECK(::gcalc::testing::log_close(lhs_, rhs_, (tol)));                      \
  } while (false)

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(engine_); }

  GNum gnum(double lo = -3.0, double hi = 3.0) { return GNum::from_log(uniform(lo, hi)); }

  /// Strictly increasing abscissae with log gaps in [min_gap, max_gap].
  std::vector<GNum> increasing(std::size_t n, double min_gap = 0.1, double max_gap = 1.0) {
    std::vector<GNum> xs;
    double u = uniform(-2.0, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(GNum::from_log(u));
      u += uniform(min_gap, max_gap);
    }
    return xs;
  }

  GTable table(std::size_t n) {
    std::vector<GNode> nodes;
    for (GNum x : increasing(n)) nodes.push_back({x, gnum()});
    return GTable(std::move(nodes));
  }

  /// Random grid; h < 1 (descending nodes) only when `descending` is set.
  UniformGrid grid(std::size_t n, bool descending = true) {
    std::vector<GNum> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(gnum());
    const double step = uniform(0.1, 0.8) * (descending && integer(0, 1) ? -1.0 : 1.0);
    return UniformGrid(gnum(), GNum::from_log(step), std::move(values));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gcalc::testing
