#pragma once

// Explicit matrix model of A^lambda on a finite window of degrees, used as a
// brute-force oracle for the submodule lattice.
//
// Basis e_i (e_i = t_+^i for i >= 0, e_i = t_-^{-i} for i < 0). From the
// defining relations t_+ t_- = v, t_- t_+ = sigma(v):
//   t_+ e_i = e_{i+1}                  (i >= 0)
//   t_+ e_i = v(a + i + 1) e_{i+1}     (i <= -1)
//   t_- e_i = v(a + i) e_{i-1}         (i >= 1)
//   t_- e_i = e_{i-1}                  (i <= 0)

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

/// A value of v at a point, kept as a product of linear factors
/// (point - root)^mult so that it is exact for symbolic points.
struct Coefficient {
  std::vector<std::pair<Scalar, int>> factors;

  bool is_zero() const;
  /// The numeric value when every factor is rational.
  std::optional<Rational> rational_value() const;
};

struct WeightModel {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<Coefficient> up;    ///< up[i - lo]: t_+ e_i = up * e_{i+1}
  std::vector<Coefficient> down;  ///< down[i - lo]: t_- e_i = down * e_{i-1}

  const Coefficient& up_at(std::int64_t i) const { return up[static_cast<std::size_t>(i - lo)]; }
  const Coefficient& down_at(std::int64_t i) const {
    return down[static_cast<std::size_t>(i - lo)];
  }
  std::int64_t size() const { return hi - lo + 1; }
};

/// v evaluated at x as a product of linear factors.
Coefficient evaluate(const FactoredPoly& v, const Scalar& x);

/// Requires lo < 0 < hi.
WeightModel weight_model(const FactoredPoly& v, const Scalar& a, std::int64_t lo, std::int64_t hi);

/// A set of degrees inside a model's window.
using DegreeSet = std::vector<std::int64_t>;

/// Every support set (including empty and full) closed under t_+ and t_-
/// within the window, found by exhaustive enumeration. Windows are limited to
/// 24 degrees.
std::vector<DegreeSet> closed_supports(const WeightModel& model);

/// Supports of the composition factors on the window, read off a maximal
/// chain of closed supports; ordered left to right.
std::vector<DegreeSet> factor_supports(const WeightModel& model);

/// Support of the simple head of A^lambda (complement of the largest closed
/// set missing degree 0).
DegreeSet head_support(const WeightModel& model);

}  // namespace gwa
