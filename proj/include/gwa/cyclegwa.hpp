#pragma once

// The algebra Pi(C[h], sigma, r) of an oriented n-cycle with doubled arrows,
// for translation automorphisms sigma_i(p)(h) = p(h + t_i). Arrow a_i runs
// from vertex i to i+1 and a_i^* back; the relations are
//   x a_i = a_i sigma_i(x),  sigma_i(x) a_i^* = a_i^* x,
//   a_i a_i^* = r_i e_i,     a_i^* a_i = sigma_i(r_i) e_{i+1}.
// Indices are taken modulo n.

#include <cstddef>
#include <optional>
#include <vector>

#include "gwa/poly.hpp"

namespace gwa {

struct CycleData {
  std::size_t n = 1;
  std::vector<Scalar> translations;
  std::vector<FactoredPoly> r;

  /// Throws domain_error unless n >= 1 and both lists have length n.
  void validate() const;
};

/// The vertex algebra e_i Pi e_i as the GWA T(C[h], theta_i, v_i), with
/// theta_i the translation by theta_shift.
struct VertexGWA {
  Scalar theta_shift;
  FactoredPoly v;
  friend bool operator==(const VertexGWA&, const VertexGWA&) = default;
};

VertexGWA vertex_data(const CycleData& c, std::size_t i);

struct ArcElements {
  FactoredPoly alpha;  ///< a_i ... a_{j-1} a_{j-1}^* ... a_i^*
  FactoredPoly beta;   ///< a_{i-1}^* ... a_j^* a_j ... a_{i-1}
};

/// The two elements of e_i Pi e_j Pi e_i in R e_i, computed by reducing the
/// paths with the defining relations. Throws index_error unless i != j are
/// both vertices.
ArcElements arc_elements(const CycleData& c, std::size_t i, std::size_t j);

/// One arrow of the doubled cycle.
struct Arrow {
  std::size_t index = 0;
  bool star = false;
};

/// Reduces a closed path to the element p e_i of R e_i it equals in Pi.
/// Throws domain_error if the path does not compose or does not reduce to
/// a vertex multiple.
FactoredPoly reduce_path(const CycleData& c, const std::vector<Arrow>& path);

/// Checks, for every vertex and every pair i != j:
///   the reduced vertex generators give v_i and theta_i(v_i),
///   v_i = alpha_ij theta_i^{-1}(beta_ij),
///   theta_i(alpha_ij) = theta_ij(beta_ji),  beta_ij = theta_ij(alpha_ji).
/// When `claimed` is given, each claimed v_i must also equal the computed one.
bool verify_identities(const CycleData& c,
                       const std::optional<std::vector<FactoredPoly>>& claimed = std::nullopt);

/// coprime(alpha_ij, beta_ij) and coprime(alpha_ji, beta_ji).
bool vertex_morita_check(const CycleData& c, std::size_t i, std::size_t j);

}  // namespace gwa
