#include "gwa/cyclegwa.hpp"

#include <string>

namespace gwa {

namespace {

std::size_t wrap(const CycleData& c, std::size_t i, std::ptrdiff_t by) {
  const auto n = static_cast<std::ptrdiff_t>(c.n);
  return static_cast<std::size_t>(((static_cast<std::ptrdiff_t>(i) + by) % n + n) % n);
}

void check_vertex(const CycleData& c, std::size_t i) {
  if (i >= c.n)
    throw index_error("vertex " + std::to_string(i) + " out of range for a cycle of length " +
                      std::to_string(c.n));
}

void check_pair(const CycleData& c, std::size_t i, std::size_t j) {
  check_vertex(c, i);
  check_vertex(c, j);
  if (i == j) throw index_error("arc elements need two distinct vertices");
}

Scalar total(const CycleData& c) {
  Scalar t;
  for (const auto& x : c.translations) t += x;
  return t;
}

// t_from + t_{from+1} + ... over `count` consecutive arrows.
Scalar forward_sum(const CycleData& c, std::size_t from, std::size_t count) {
  Scalar s;
  for (std::size_t m = 0; m < count; ++m) s += c.translations[wrap(c, from, m)];
  return s;
}

std::size_t distance(const CycleData& c, std::size_t from, std::size_t to) {
  return (to + c.n - from) % c.n;
}

std::size_t source(const CycleData& c, const Arrow& a) {
  return a.star ? wrap(c, a.index, 1) : a.index;
}

std::size_t target(const CycleData& c, const Arrow& a) {
  return a.star ? a.index : wrap(c, a.index, 1);
}

}  // namespace

void CycleData::validate() const {
  if (n < 1) throw domain_error("cycle length must be at least 1");
  if (translations.size() != n || r.size() != n)
    throw domain_error("cycle data needs exactly n translations and n polynomials");
}

VertexGWA vertex_data(const CycleData& c, std::size_t i) {
  c.validate();
  check_vertex(c, i);
  // v_i = r_i * sigma_i^{-1}(r_{i+1}) * (sigma_i^{-1} sigma_{i+1}^{-1})(r_{i+2}) * ...
  FactoredPoly v;
  for (std::size_t m = 0; m < c.n; ++m)
    v = multiply(v, shift(c.r[wrap(c, i, m)], -forward_sum(c, i, m)));
  return {total(c), v};
}

FactoredPoly reduce_path(const CycleData& c, const std::vector<Arrow>& path) {
  c.validate();
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if (target(c, path[k]) != source(c, path[k + 1]))
      throw domain_error("path does not compose at position " + std::to_string(k + 1));
  if (!path.empty() && target(c, path.back()) != source(c, path.front()))
    throw domain_error("path is not closed");

  FactoredPoly coefficient;
  std::vector<Arrow> stack;
  for (const Arrow& next : path) {
    if (stack.empty() || stack.back().index != next.index || stack.back().star == next.star) {
      stack.push_back(next);
      continue;
    }
    const Arrow top = stack.back();
    stack.pop_back();
    const Scalar& t = c.translations[top.index];
    const FactoredPoly& r = c.r[top.index];
    // a a^* = r e_i ; a^* a = sigma(r) e_{i+1}
    FactoredPoly p = top.star ? shift(r, t) : r;
    // Move p to the front: a y = sigma^{-1}(y) a and a^* y = sigma(y) a^*.
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      const Scalar& s = c.translations[it->index];
      p = it->star ? shift(p, s) : shift(p, -s);
    }
    coefficient = multiply(coefficient, p);
  }
  if (!stack.empty()) throw domain_error("path does not reduce to a vertex multiple");
  return coefficient;
}

ArcElements arc_elements(const CycleData& c, std::size_t i, std::size_t j) {
  c.validate();
  check_pair(c, i, j);
  const std::size_t fwd = distance(c, i, j);
  const std::size_t back = distance(c, j, i);
  std::vector<Arrow> alpha_path;
  for (std::size_t m = 0; m < fwd; ++m) alpha_path.push_back({wrap(c, i, m), false});
  for (std::size_t m = fwd; m-- > 0;) alpha_path.push_back({wrap(c, i, m), true});
  std::vector<Arrow> beta_path;
  for (std::size_t m = 1; m <= back; ++m) beta_path.push_back({wrap(c, i, -static_cast<std::ptrdiff_t>(m)), true});
  for (std::size_t m = back; m >= 1; --m) beta_path.push_back({wrap(c, i, -static_cast<std::ptrdiff_t>(m)), false});
  return {reduce_path(c, alpha_path), reduce_path(c, beta_path)};
}

bool verify_identities(const CycleData& c,
                       const std::optional<std::vector<FactoredPoly>>& claimed) {
  c.validate();
  if (claimed && claimed->size() != c.n) return false;
  const Scalar theta = total(c);
  std::vector<FactoredPoly> v;
  for (std::size_t i = 0; i < c.n; ++i) {
    v.push_back(vertex_data(c, i).v);
    if (claimed && (*claimed)[i] != v[i]) return false;
    // f(t_+) = a_i ... a_{i-1}, f(t_-) = a_{i-1}^* ... a_i^*.
    std::vector<Arrow> plus_minus;
    std::vector<Arrow> minus_plus;
    for (std::size_t m = 0; m < c.n; ++m) plus_minus.push_back({wrap(c, i, m), false});
    for (std::size_t m = c.n; m-- > 0;) plus_minus.push_back({wrap(c, i, m), true});
    for (std::size_t m = c.n; m-- > 0;) minus_plus.push_back({wrap(c, i, m), true});
    for (std::size_t m = 0; m < c.n; ++m) minus_plus.push_back({wrap(c, i, m), false});
    if (reduce_path(c, plus_minus) != v[i]) return false;
    if (reduce_path(c, minus_plus) != shift(v[i], theta)) return false;
  }
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t j = 0; j < c.n; ++j) {
      if (i == j) continue;
      const ArcElements ij = arc_elements(c, i, j);
      const ArcElements ji = arc_elements(c, j, i);
      // theta_ij = sigma_{i-1} ... sigma_j
      const Scalar theta_ij = forward_sum(c, j, distance(c, j, i));
      if (v[i] != multiply(ij.alpha, shift(ij.beta, -theta))) return false;
      if (shift(ij.alpha, theta) != shift(ji.beta, theta_ij)) return false;
      if (ij.beta != shift(ji.alpha, theta_ij)) return false;
    }
  }
  return true;
}

bool vertex_morita_check(const CycleData& c, std::size_t i, std::size_t j) {
  const ArcElements ij = arc_elements(c, i, j);
  const ArcElements ji = arc_elements(c, j, i);
  return coprime(ij.alpha, ij.beta) && coprime(ji.alpha, ji.beta);
}

}  // namespace gwa
