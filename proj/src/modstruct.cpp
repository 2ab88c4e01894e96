#include "gwa/modstruct.hpp"

#include <algorithm>
#include <cstdlib>

#include "gwa/roottype.hpp"

namespace gwa {

namespace {

void require_root(const FactoredPoly& v, const Scalar& nu) {
  if (!v.has_root(nu))
    throw domain_error(nu.to_string() + " is not a root of " + v.to_string());
}

std::optional<std::size_t> factor_containing(const CompositionSeries& s, std::int64_t degree) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].delta.contains(degree)) return i;
  return std::nullopt;
}

CompositionFactor make_factor(Scalar point, std::int64_t shift, DegreeInterval delta) {
  const bool bounded_below = delta.lo.has_value();
  return {{std::move(point), shift}, delta, bounded_below};
}

}  // namespace

DegreeInterval DegreeInterval::translated(std::int64_t by) const {
  DegreeInterval out = *this;
  if (out.lo) *out.lo += by;
  if (out.hi) *out.hi += by;
  return out;
}

std::vector<DegreeInterval> SubmoduleDescriptor::support() const {
  auto part = [](std::int64_t j) {
    return j <= 0 ? DegreeInterval{std::nullopt, j - 1} : DegreeInterval{j, std::nullopt};
  };
  if (kind == Kind::single) return {part(k)};
  return {part(k), part(k2)};
}

std::string_view to_string(ExtStatus status) {
  switch (status) {
    case ExtStatus::zero: return "Zero";
    case ExtStatus::nonzero_adjacent: return "NonzeroAdjacent";
    case ExtStatus::nonzero_self: return "NonzeroSelf";
    case ExtStatus::unknown_self_in_zsigma: return "UnknownSelfInZsigma";
  }
  return "?";
}

std::vector<std::int64_t> chi(const FactoredPoly& v, const Scalar& a) {
  std::vector<std::int64_t> out;
  for (const auto& b : v.blocks())
    if (auto k = integer_difference(b.root, a)) out.push_back(*k);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubmoduleDescriptor> submodules(const FactoredPoly& v, const Scalar& a) {
  using Kind = SubmoduleDescriptor::Kind;
  const auto ks = chi(v, a);
  std::vector<SubmoduleDescriptor> out;
  for (auto k : ks) out.push_back({Kind::single, k, 0});
  for (auto k : ks) {
    if (k > 0) continue;
    for (auto k2 : ks)
      if (k2 > 0) out.push_back({Kind::pair, k, k2});
  }
  return out;
}

CompositionSeries composition_series(const FactoredPoly& v, const Scalar& a) {
  const auto ks = chi(v, a);
  CompositionSeries out;
  std::optional<std::int64_t> prev;  // lower end of the next interval
  for (auto k : ks) {
    if (k > 0) break;
    // Quotient A^{lambda,k} / A^{lambda,prev}, generated in its top degree k - 1.
    out.push_back(make_factor(a + Scalar(k - 1), 1 - k, {prev, k - 1}));
    prev = k;
  }
  auto first_positive = std::find_if(ks.begin(), ks.end(), [](auto k) { return k > 0; });
  std::optional<std::int64_t> head_hi;
  if (first_positive != ks.end()) head_hi = *first_positive - 1;
  out.push_back(make_factor(a, 0, {prev, head_hi}));
  for (auto it = first_positive; it != ks.end(); ++it) {
    std::optional<std::int64_t> hi;
    if (std::next(it) != ks.end()) hi = *std::next(it) - 1;
    // Quotient A^{lambda,k} / A^{lambda,next}, generated in its bottom degree k.
    out.push_back(make_factor(a + Scalar(*it), -*it, {*it, hi}));
  }
  return out;
}

CompositionSeries translate_series(const CompositionSeries& series, std::int64_t by) {
  CompositionSeries out = series;
  for (auto& f : out) {
    f.delta = f.delta.translated(by);
    f.label.shift -= by;
  }
  return out;
}

bool equivalent_series(const CompositionSeries& a, const CompositionSeries& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    if (x.delta != y.delta || x.in_o_plus != y.in_o_plus) return false;
    if (x.label.point + Scalar(x.label.shift) != y.label.point + Scalar(y.label.shift))
      return false;
    if (!x.delta.contains(-x.label.shift) || !y.delta.contains(-y.label.shift)) return false;
  }
  return true;
}

ExtStatus ext1(const FactoredPoly& v, const SimpleLabel& s1, const SimpleLabel& s2) {
  // Ext^1(S^a[s], S^b[t]) = Ext^1(S^a, S^b[n]) with n = t - s.
  const std::int64_t n = s2.shift - s1.shift;
  const Scalar& a = s1.point;
  if (s2.point != a - Scalar(n)) return ExtStatus::zero;
  if (chi(v, a).empty()) return ExtStatus::nonzero_self;
  // Both simples are summands of the semisimplified A^a: S^a sits in degree
  // 0, S^b[n] in degree -n.
  const CompositionSeries series = composition_series(v, a);
  const auto i = factor_containing(series, 0);
  const auto j = factor_containing(series, -n);
  if (*i == *j) return ExtStatus::unknown_self_in_zsigma;
  if ((*i > *j ? *i - *j : *j - *i) == 1) return ExtStatus::nonzero_adjacent;
  return ExtStatus::zero;
}

Scalar artinian_block_key(const FactoredPoly&, const SimpleLabel& label) {
  return label.point + Scalar(label.shift);
}

CompositionSeries verma_series(const FactoredPoly& v, const Scalar& nu) {
  require_root(v, nu);
  std::vector<std::int64_t> positive;
  for (auto k : chi(v, nu))
    if (k > 0) positive.push_back(k);
  CompositionSeries out;
  std::int64_t start = 0;
  Scalar point = nu;
  std::int64_t shift = 0;
  for (auto k : positive) {
    out.push_back(make_factor(point, shift, {start, k - 1}));
    start = k;
    point = nu + Scalar(k);
    shift = -k;
  }
  out.push_back(make_factor(point, shift, {start, std::nullopt}));
  return out;
}

std::vector<OPlusBlock> oplus_blocks(const FactoredPoly& v) {
  std::vector<OPlusBlock> out;
  for (const auto& cls : z_classes(v).classes) {
    OPlusBlock block{cls.anchor, {}};
    for (const auto& e : cls.entries) block.chi_w.push_back(e.offset);
    out.push_back(std::move(block));
  }
  return out;
}

ProjectiveData projective_data(const FactoredPoly& v, const Scalar& nu) {
  require_root(v, nu);
  std::int64_t deepest = 0;
  for (const auto& b : v.blocks())
    if (auto n = integer_difference(nu, b.root); n && *n > deepest) deepest = *n;
  ProjectiveData p{nu, deepest + 1, 0};
  for (std::int64_t j = 0; j < p.cutoff; ++j) p.power += v.multiplicity(nu - Scalar(j));
  return p;
}

std::optional<std::int64_t> hom_degree(const FactoredPoly& v, const Scalar& nu1,
                                       const Scalar& nu2) {
  require_root(v, nu1);
  require_root(v, nu2);
  return integer_difference(nu1, nu2);
}

FactoredPoly annihilator_An(const FactoredPoly& v, std::int64_t n) {
  if (n < 1) throw domain_error("annihilator_An requires n >= 1");
  FactoredPoly out;
  for (std::int64_t j = 0; j < n; ++j) out = multiply(out, shift(v, Scalar(-j)));
  return out;
}

int m_nu_length(const FactoredPoly& v, const Scalar& nu) {
  require_root(v, nu);
  return v.multiplicity(nu);
}

}  // namespace gwa
