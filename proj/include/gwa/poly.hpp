#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwa/scalar.hpp"

namespace gwa {

/// A root together with its multiplicity (always >= 1 inside a FactoredPoly).
struct RootBlock {
  Scalar root;
  int multiplicity = 0;

  friend bool operator==(const RootBlock&, const RootBlock&) = default;
};

/// A monic polynomial in C[h] stored as its root multiset.
///
/// Roots are distinct and kept in ascending Scalar order; the empty multiset
/// is the constant polynomial 1. Leading coefficients are never represented.
class FactoredPoly {
 public:
  FactoredPoly() = default;

  /// Builds from (root, multiplicity) pairs; repeated roots accumulate.
  /// Throws domain_error on a multiplicity < 1.
  static FactoredPoly from_roots(std::vector<RootBlock> blocks);
  static FactoredPoly linear(const Scalar& root, int multiplicity = 1);

  const std::vector<RootBlock>& blocks() const { return blocks_; }
  bool is_one() const { return blocks_.empty(); }
  int degree() const;
  int multiplicity(const Scalar& root) const;
  bool has_root(const Scalar& root) const { return multiplicity(root) > 0; }

  /// The polynomial with the block at `root` removed (unchanged if absent).
  FactoredPoly without(const Scalar& root) const;

  /// Canonical text, e.g. "(h)*(h+1)^2*(h-w)". The constant is "1".
  std::string to_string() const;

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
  friend auto operator<=>(const FactoredPoly& a, const FactoredPoly& b) {
    return std::lexicographical_compare_three_way(
        a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(), b.blocks_.end(),
        [](const RootBlock& x, const RootBlock& y) {
          if (auto c = x.root <=> y.root; c != 0) return c;
          return x.multiplicity <=> y.multiplicity;
        });
  }

 private:
  std::vector<RootBlock> blocks_;
};

/// Parses `poly := '1' | factor ('*'? factor)*` with
/// `factor := ('h' | '(' linear-in-h ')') ('^' int)?`. Each linear factor must
/// have h-coefficient 1. Throws parse_error.
FactoredPoly parse_poly(std::string_view text);

/// v(h + c): every root r becomes r - c.
FactoredPoly shift(const FactoredPoly& v, const Scalar& c);

/// Root multiset of v(c - h): every root r becomes c - r.
FactoredPoly reflect(const FactoredPoly& v, const Scalar& c);

FactoredPoly multiply(const FactoredPoly& u, const FactoredPoly& w);

/// True iff u and w share no root.
bool coprime(const FactoredPoly& u, const FactoredPoly& w);

int multiplicity(const FactoredPoly& v, const Scalar& a);

}  // namespace gwa
