#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

/// One Z-translation class of roots. `anchor` is the smallest root of the
/// class; entries hold (offset from anchor, multiplicity) with strictly
/// increasing offsets starting at 0.
struct ZClass {
  struct Entry {
    std::int64_t offset = 0;
    int multiplicity = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Scalar anchor;
  std::vector<Entry> entries;

  /// Multiplicities in offset order, gaps ignored.
  std::vector<int> multiplicity_sequence() const;

  friend bool operator==(const ZClass&, const ZClass&) = default;
};

/// The root type of a polynomial: its Z-classes sorted by the textual form
/// of their anchors.
struct TypeSignature {
  std::vector<ZClass> classes;
  friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
};

TypeSignature z_classes(const FactoredPoly& v);

/// u ~ v: a bijection of Z-classes with congruent anchors and equal ordered
/// multiplicity sequences.
bool same_type(const FactoredPoly& u, const FactoredPoly& v);

/// Some b with same_type(shift(v1, b), v2), reported as its representative
/// modulo Z (integer b is reported as 0). Absent when T(v1) and T(v2) are
/// not strongly graded Morita equivalent. Requires both degrees >= 1.
std::optional<Scalar> morita_equivalent(const FactoredPoly& v1, const FactoredPoly& v2);

enum class IsoSign { plus, minus };

std::string_view to_string(IsoSign sign);

/// v2(h) = eta * v1(nu + h) (plus) or v2(h) = eta * v1(nu - h) (minus).
struct Isomorphism {
  Scalar nu;
  IsoSign sign = IsoSign::plus;
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/// Both kinds of isomorphism data that exist between T(v1) and T(v2). A plus
/// isomorphism is graded; a minus one is anti-graded.
struct IsomorphismSet {
  std::optional<Scalar> plus;
  std::optional<Scalar> minus;
};

IsomorphismSet isomorphisms(const FactoredPoly& v1, const FactoredPoly& v2);

/// The graded (plus) isomorphism when one exists, otherwise the minus one.
std::optional<Isomorphism> isomorphic(const FactoredPoly& v1, const FactoredPoly& v2);

/// Root multiset of v1 transported by an isomorphism: the polynomial
/// v1(nu + h) or v1(nu - h) up to a unit.
FactoredPoly apply_isomorphism(const FactoredPoly& v1, const Isomorphism& iso);

/// Condition (*) for sigma = translation by t on C[h]: the zero set of v is a
/// finite set of points, so it holds unless t = 0 and v has a root.
bool check_star(const Scalar& t, const FactoredPoly& v);

}  // namespace gwa
