#pragma once

// Hand-rolled random generators for property tests. Every generator draws
// from a caller-owned std::mt19937_64 so runs are reproducible by seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gwa/cyclegwa.hpp"
#include "gwa/poly.hpp"
#include "gwa/roottype.hpp"

namespace gwa::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return pick(rng, 0, 1) == 1; }

template <class T>
const T& choose(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(xs.size()) - 1))];
}

/// A root drawn from a few Z-classes: integers, half-integers and two
/// symbolic classes.
inline Scalar random_root(Rng& rng, int spread = 4) {
  const Scalar base = choose(rng, std::vector<Scalar>{Scalar(0), Scalar(Rational(1, 2)),
                                                      Scalar::symbol("w"),
                                                      Scalar::symbol("z") + Scalar(Rational(1, 3))});
  return base + Scalar(pick(rng, -spread, spread));
}

inline Scalar random_translation(Rng& rng) {
  switch (pick(rng, 0, 3)) {
    case 0: return Scalar(pick(rng, -3, 3));
    case 1: return Scalar(Rational(pick(rng, -5, 5), pick(rng, 1, 3)));
    case 2: return Scalar::symbol("w", pick(rng, -2, 2)) + Scalar(pick(rng, -2, 2));
    default: return Scalar::symbol("z") - Scalar::symbol("w") + Scalar(Rational(pick(rng, -4, 4), 2));
  }
}

/// Integer roots in [lo, hi], degree in [1, max_degree], multiplicities <= max_mult.
inline FactoredPoly random_integer_poly(Rng& rng, int lo, int hi, int max_degree, int max_mult) {
  const int degree = pick(rng, 1, max_degree);
  std::vector<RootBlock> blocks;
  int used = 0;
  while (used < degree) {
    const int m = std::min(pick(rng, 1, max_mult), degree - used);
    const Scalar r(pick(rng, lo, hi));
    const auto it = std::find_if(blocks.begin(), blocks.end(),
                                 [&](const RootBlock& b) { return b.root == r; });
    if (it != blocks.end()) {
      if (it->multiplicity + m > max_mult) continue;
      it->multiplicity += m;
    } else {
      blocks.push_back({r, m});
    }
    used += m;
  }
  return FactoredPoly::from_roots(blocks);
}

/// Roots from mixed Z-classes (integer and symbolic), degree in [1, max_degree].
inline FactoredPoly random_mixed_poly(Rng& rng, int max_degree, int max_mult = 3) {
  const int degree = pick(rng, 1, max_degree);
  std::vector<RootBlock> blocks;
  for (int used = 0; used < degree;) {
    const int m = std::min(pick(rng, 1, max_mult), degree - used);
    blocks.push_back({random_root(rng), m});
    used += m;
  }
  return FactoredPoly::from_roots(blocks);
}

/// A polynomial of the same root type as v: each Z-class keeps its
/// multiplicity sequence, gets fresh increasing integer gaps and a new
/// integer offset for its anchor.
inline FactoredPoly same_type_partner(Rng& rng, const FactoredPoly& v, int max_gap = 3) {
  std::vector<RootBlock> blocks;
  for (const auto& cls : z_classes(v).classes) {
    Scalar pos = cls.anchor + Scalar(pick(rng, -3, 3));
    for (const auto& e : cls.entries) {
      blocks.push_back({pos, e.multiplicity});
      pos += Scalar(pick(rng, 1, max_gap));
    }
  }
  return FactoredPoly::from_roots(blocks);
}

/// Sorted multiplicity sequences per class; equal for same-type polynomials.
inline std::multiset<std::vector<int>> class_sequences(const FactoredPoly& v) {
  std::multiset<std::vector<int>> out;
  for (const auto& cls : z_classes(v).classes) out.insert(cls.multiplicity_sequence());
  return out;
}

inline std::multiset<int> multiplicity_multiset(const FactoredPoly& v) {
  std::multiset<int> out;
  for (const auto& b : v.blocks()) out.insert(b.multiplicity);
  return out;
}

inline CycleData random_cycle(Rng& rng, std::size_t max_n, int max_r_degree = 2) {
  CycleData c;
  c.n = static_cast<std::size_t>(pick(rng, 1, static_cast<int>(max_n)));
  for (std::size_t i = 0; i < c.n; ++i) {
    c.translations.push_back(random_translation(rng));
    std::vector<RootBlock> blocks;
    for (int d = pick(rng, 0, max_r_degree); d > 0; --d) blocks.push_back({random_root(rng, 3), 1});
    c.r.push_back(FactoredPoly::from_roots(blocks));
  }
  return c;
}

/// Copy of v with the root at `index` (in block order) moved by `delta`.
inline FactoredPoly perturb_root(const FactoredPoly& v, std::size_t index, const Scalar& delta) {
  std::vector<RootBlock> blocks = v.blocks();
  blocks[index].root += delta;
  return FactoredPoly::from_roots(blocks);
}

}  // namespace gwa::testing
