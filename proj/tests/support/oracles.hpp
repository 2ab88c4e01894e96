#pragma once

// Brute-force oracles built on the explicit weight model. They only use the
// library's polynomial arithmetic and the enumeration in weight_model.hpp,
// never the closed-form formulas they check.

#include <algorithm>
#include <set>
#include <utility>

#include "gwa/modstruct.hpp"
#include "gwa/weight_model.hpp"
#include "support/generators.hpp"

namespace gwa::testing {

/// (v, a) with deg v <= 4 and every entry of chi(v, a) inside [-6, 6], so
/// each composition factor meets the window [-8, 8]. Some roots sit in other
/// Z-classes, and some inputs make A^lambda simple.
inline std::pair<FactoredPoly, Scalar> random_module_input(Rng& rng) {
  const Scalar a = choose(rng, std::vector<Scalar>{Scalar(0), Scalar(pick(rng, -3, 3)),
                                                   Scalar::symbol("w") + Scalar(pick(rng, -2, 2)),
                                                   Scalar(Rational(1, 2))});
  const int degree = pick(rng, 1, 4);
  std::vector<RootBlock> blocks;
  for (int i = 0; i < degree; ++i) {
    if (pick(rng, 0, 4) == 0) {
      blocks.push_back({Scalar::symbol("z") + Scalar(pick(rng, -3, 3)), 1});
    } else {
      blocks.push_back({a + Scalar(pick(rng, -6, 6)), pick(rng, 1, 2)});
    }
  }
  return {FactoredPoly::from_roots(blocks), a};
}

inline DegreeSet clip(const DegreeInterval& d, std::int64_t lo, std::int64_t hi) {
  DegreeSet out;
  for (std::int64_t i = lo; i <= hi; ++i)
    if (d.contains(i)) out.push_back(i);
  return out;
}

inline bool submodules_match_oracle(const FactoredPoly& v, const Scalar& a, std::int64_t lo,
                                    std::int64_t hi) {
  const auto found = closed_supports(weight_model(v, a, lo, hi));
  const std::set<DegreeSet> brute(found.begin(), found.end());
  std::set<DegreeSet> expected;
  expected.insert(DegreeSet{});
  expected.insert(clip({std::nullopt, std::nullopt}, lo, hi));
  for (const auto& sub : submodules(v, a)) {
    DegreeSet s;
    for (const auto& part : sub.support()) {
      const auto c = clip(part, lo, hi);
      s.insert(s.end(), c.begin(), c.end());
    }
    std::sort(s.begin(), s.end());
    expected.insert(s);
  }
  return brute == expected;
}

/// Factor supports equal the clipped intervals, and every label S^b[n]
/// names a simple whose own head support, moved by -n, is that interval.
inline bool series_match_oracle(const FactoredPoly& v, const Scalar& a, std::int64_t lo,
                                std::int64_t hi) {
  const auto series = composition_series(v, a);
  std::vector<DegreeSet> expected;
  for (const auto& f : series)
    if (auto c = clip(f.delta, lo, hi); !c.empty()) expected.push_back(c);
  if (factor_supports(weight_model(v, a, lo, hi)) != expected) return false;
  for (const auto& f : series) {
    const std::int64_t n = f.label.shift;
    if (!(lo + n < 0 && 0 < hi + n)) return false;
    DegreeSet head = head_support(weight_model(v, f.label.point, lo + n, hi + n));
    for (auto& d : head) d -= n;
    if (head != clip(f.delta, lo, hi)) return false;
    if (f.in_o_plus != f.delta.lo.has_value()) return false;
  }
  return true;
}

inline bool partitions_z(const CompositionSeries& s) {
  if (s.empty() || s.front().delta.lo || s.back().delta.hi) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!s[i].delta.hi || !s[i + 1].delta.lo) return false;
    if (*s[i].delta.hi + 1 != *s[i + 1].delta.lo) return false;
    if (s[i].delta.lo && *s[i].delta.lo > *s[i].delta.hi) return false;
  }
  return true;
}

/// Adjacency read off the brute-force factor supports: the union of the two
/// supports is an interval.
inline bool adjacent_by_oracle(const std::vector<DegreeSet>& supports, std::size_t i,
                               std::size_t j) {
  DegreeSet u = supports[i];
  u.insert(u.end(), supports[j].begin(), supports[j].end());
  std::sort(u.begin(), u.end());
  for (std::size_t k = 0; k + 1 < u.size(); ++k)
    if (u[k] + 1 != u[k + 1]) return false;
  return true;
}

}  // namespace gwa::testing
