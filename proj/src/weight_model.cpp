#include "gwa/weight_model.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace gwa {

bool Coefficient::is_zero() const {
  return std::any_of(factors.begin(), factors.end(),
                     [](const auto& f) { return f.first.is_zero(); });
}

std::optional<Rational> Coefficient::rational_value() const {
  Rational value = 1;
  for (const auto& [base, exponent] : factors) {
    if (!base.is_rational()) return std::nullopt;
    for (int e = 0; e < exponent; ++e) value *= base.constant();
  }
  return value;
}

Coefficient evaluate(const FactoredPoly& v, const Scalar& x) {
  Coefficient c;
  for (const auto& b : v.blocks()) c.factors.emplace_back(x - b.root, b.multiplicity);
  return c;
}

WeightModel weight_model(const FactoredPoly& v, const Scalar& a, std::int64_t lo,
                         std::int64_t hi) {
  if (!(lo < 0 && 0 < hi)) throw domain_error("weight model window must satisfy lo < 0 < hi");
  WeightModel m;
  m.lo = lo;
  m.hi = hi;
  for (std::int64_t i = lo; i <= hi; ++i) {
    m.up.push_back(i >= 0 ? Coefficient{} : evaluate(v, a + Scalar(i + 1)));
    m.down.push_back(i >= 1 ? evaluate(v, a + Scalar(i)) : Coefficient{});
  }
  return m;
}

namespace {

using Mask = std::uint32_t;
constexpr std::int64_t max_window = 24;

struct Edges {
  Mask up = 0;    // bit j: t_+ maps degree lo+j nontrivially into the window
  Mask down = 0;  // bit j: t_- maps degree lo+j nontrivially into the window
  Mask full = 0;
};

Edges edges_of(const WeightModel& m) {
  if (m.size() > max_window) throw domain_error("weight model window too large for enumeration");
  Edges e;
  const auto n = static_cast<int>(m.size());
  e.full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  for (int j = 0; j < n; ++j) {
    if (j + 1 < n && !m.up[j].is_zero()) e.up |= Mask{1} << j;
    if (j >= 1 && !m.down[j].is_zero()) e.down |= Mask{1} << j;
  }
  return e;
}

bool closed(Mask s, const Edges& e) {
  return (((s & e.up) << 1) & ~s) == 0 && (((s & e.down) >> 1) & ~s) == 0;
}

std::vector<Mask> closed_masks(const WeightModel& m) {
  const Edges e = edges_of(m);
  std::vector<Mask> out;
  for (Mask s = 0;; ++s) {
    if (closed(s, e)) out.push_back(s);
    if (s == e.full) break;
  }
  return out;
}

DegreeSet to_degrees(Mask s, std::int64_t lo) {
  DegreeSet out;
  for (int j = 0; s != 0; ++j, s >>= 1)
    if (s & 1) out.push_back(lo + j);
  return out;
}

}  // namespace

std::vector<DegreeSet> closed_supports(const WeightModel& model) {
  std::vector<DegreeSet> out;
  for (Mask s : closed_masks(model)) out.push_back(to_degrees(s, model.lo));
  return out;
}

std::vector<DegreeSet> factor_supports(const WeightModel& model) {
  const std::vector<Mask> sets = closed_masks(model);
  const Mask full = edges_of(model).full;
  std::vector<Mask> diffs;
  Mask current = 0;
  while (current != full) {
    Mask best = full;
    for (Mask d : sets) {
      if ((d & current) != current || d == current) continue;
      if (std::popcount(d) < std::popcount(best)) best = d;
    }
    diffs.push_back(best & ~current);
    current = best;
  }
  std::sort(diffs.begin(), diffs.end(),
            [](Mask x, Mask y) { return std::countr_zero(x) < std::countr_zero(y); });
  std::vector<DegreeSet> out;
  for (Mask d : diffs) out.push_back(to_degrees(d, model.lo));
  return out;
}

DegreeSet head_support(const WeightModel& model) {
  const Mask zero_bit = Mask{1} << static_cast<int>(-model.lo);
  Mask maximal = 0;
  for (Mask s : closed_masks(model))
    if (!(s & zero_bit)) maximal |= s;
  return to_degrees(edges_of(model).full & ~maximal, model.lo);
}

}  // namespace gwa
