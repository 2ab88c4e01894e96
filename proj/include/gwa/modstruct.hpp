#pragma once

// Graded weight modules over the classical GWA A = T(v).
//
// Point conventions (lambda = (h - a)):
//   sigma^k(v) in lambda  <=>  v(a + k) = 0,
//   the point of sigma^k(lambda) is a - k,
//   S^b[n] occupies degree d of A^a exactly when b + n = a,
//   and (M[n])_d = M_{n+d}, so delta(M[n]) = delta(M) - n.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

/// S^{(h - point)}[shift].
struct SimpleLabel {
  Scalar point;
  std::int64_t shift = 0;
  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

/// Inclusive degree interval; an absent end is infinite.
struct DegreeInterval {
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;

  bool contains(std::int64_t d) const { return (!lo || *lo <= d) && (!hi || d <= *hi); }
  DegreeInterval translated(std::int64_t by) const;
  friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

struct CompositionFactor {
  SimpleLabel label;
  DegreeInterval delta;
  bool in_o_plus = false;
  friend bool operator==(const CompositionFactor&, const CompositionFactor&) = default;
};

/// Factors ordered left to right by degree interval.
using CompositionSeries = std::vector<CompositionFactor>;

/// A proper nontrivial graded submodule of A^lambda: A^{lambda,k}, or
/// A^{lambda,k} + A^{lambda,k2} with k <= 0 < k2.
struct SubmoduleDescriptor {
  enum class Kind { single, pair };
  Kind kind = Kind::single;
  std::int64_t k = 0;
  std::int64_t k2 = 0;

  /// Degrees of the submodule, as one or two intervals.
  std::vector<DegreeInterval> support() const;
  friend bool operator==(const SubmoduleDescriptor&, const SubmoduleDescriptor&) = default;
};

enum class ExtStatus { zero, nonzero_adjacent, nonzero_self, unknown_self_in_zsigma };

std::string_view to_string(ExtStatus status);

/// P_nu = A(N)_nu with degree-zero part C[h]/(h - nu)^f.
struct ProjectiveData {
  Scalar root;
  std::int64_t cutoff = 1;
  int power = 1;
  friend bool operator==(const ProjectiveData&, const ProjectiveData&) = default;
};

/// chi_lambda for lambda = (h - a): {k : v(a + k) = 0}, sorted.
std::vector<std::int64_t> chi(const FactoredPoly& v, const Scalar& a);

std::vector<SubmoduleDescriptor> submodules(const FactoredPoly& v, const Scalar& a);

/// The simple subquotients of A^lambda (the summands of the semisimplified
/// module), left to right.
CompositionSeries composition_series(const FactoredPoly& v, const Scalar& a);

/// Series of the module translated by [-by]: intervals move by +by and the
/// shifts by -by. Describes the same simples as composition_series(v, a - by).
CompositionSeries translate_series(const CompositionSeries& series, std::int64_t by);

/// Equality of two series up to relabelling isomorphic simples: intervals,
/// O+ flags and block keys agree, and each label names a simple whose
/// canonical degree lies in its interval.
bool equivalent_series(const CompositionSeries& a, const CompositionSeries& b);

/// Ext^1_gr(S1, S2) vanishing pattern.
ExtStatus ext1(const FactoredPoly& v, const SimpleLabel& s1, const SimpleLabel& s2);

/// point + shift: two labels lie in the same Artinian block iff keys agree.
Scalar artinian_block_key(const FactoredPoly& v, const SimpleLabel& label);

/// Composition factors of the Verma module V^nu = A^nu / A^{nu,0}.
/// Throws domain_error if nu is not a root of v.
CompositionSeries verma_series(const FactoredPoly& v, const Scalar& nu);

/// Block data of O+: one entry per Z-class of roots, with the smallest root
/// as anchor and chi_w = {n : anchor + n is a root}.
struct OPlusBlock {
  Scalar anchor;
  std::vector<std::int64_t> chi_w;
  friend bool operator==(const OPlusBlock&, const OPlusBlock&) = default;
};

std::vector<OPlusBlock> oplus_blocks(const FactoredPoly& v);

ProjectiveData projective_data(const FactoredPoly& v, const Scalar& nu);

/// The only n for which Hom_gr(P_nu1, P_nu2[n]) can be nonzero.
std::optional<std::int64_t> hom_degree(const FactoredPoly& v, const Scalar& nu1,
                                       const Scalar& nu2);

/// Generator of ann(A(n)): the product of sigma^{-j}(v) for 0 <= j < n.
FactoredPoly annihilator_An(const FactoredPoly& v, std::int64_t n);

/// Length of M_nu = P_nu / A P_{-1}, i.e. mult(nu, v).
int m_nu_length(const FactoredPoly& v, const Scalar& nu);

}  // namespace gwa
