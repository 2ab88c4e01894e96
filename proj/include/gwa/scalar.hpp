#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gwa/errors.hpp"

namespace gwa {

using Rational = mpq_class;

/// An element of the Q-span of {1, w1, w2, ...} where the wi are formal,
/// algebraically independent transcendentals. Roots of polynomials and
/// translation amounts live here.
///
/// Canonical sparse form: no stored coefficient is zero, symbols are kept
/// sorted by name. The reserved name "1" addresses the rational part.
class Scalar {
 public:
  static constexpr std::string_view unit_name = "1";

  Scalar() = default;
  Scalar(long value) : constant_(value) {}  // NOLINT(implicit)
  explicit Scalar(Rational value) : constant_(std::move(value)) {
    constant_.canonicalize();
  }

  static Scalar symbol(std::string name, Rational coeff = 1);

  /// Coefficient of a symbol, or of the unit when name == "1".
  Rational coefficient(std::string_view name) const;
  const Rational& constant() const { return constant_; }
  const std::vector<std::pair<std::string, Rational>>& symbols() const {
    return symbols_;
  }

  bool is_zero() const { return symbols_.empty() && constant_ == 0; }
  bool is_rational() const { return symbols_.empty(); }
  bool is_integer() const;

  /// Integer part removed: symbolic part plus the fractional constant in [0, 1).
  /// Two scalars are congruent modulo Z iff their representatives are equal.
  Scalar mod_z_representative() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Rational& factor);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Rational& f) { return a *= f; }
  friend Scalar operator*(const Rational& f, Scalar a) { return a *= f; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Deterministic total order: symbolic parts compared lexicographically by
  /// (name, coefficient), then the rational constant. Within a Z-class this
  /// is the numeric order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Textual form, e.g. "5/2", "w", "2*w-1/3", "w1-w2+4".
  std::string to_string() const;

 private:
  Rational constant_{0};
  std::vector<std::pair<std::string, Rational>> symbols_;
};

/// a - b in canonical form.
Scalar sub(const Scalar& a, const Scalar& b);

bool is_integer(const Scalar& a);

/// n when a - b equals the integer n. Throws domain_error if n does not fit
/// in 64 bits.
std::optional<std::int64_t> integer_difference(const Scalar& a, const Scalar& b);

/// Parses the textual form accepted by `Scalar::to_string`. Throws parse_error.
Scalar parse_scalar(std::string_view text);

std::string rational_to_string(const Rational& q);

}  // namespace gwa
