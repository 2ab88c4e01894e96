#include "gwa/poly.hpp"

#include <algorithm>

#include "linear_parser.hpp"

namespace gwa {

namespace {

bool root_less(const RootBlock& a, const RootBlock& b) { return a.root < b.root; }

}  // namespace

FactoredPoly FactoredPoly::from_roots(std::vector<RootBlock> blocks) {
  for (const auto& b : blocks)
    if (b.multiplicity < 1) throw domain_error("root multiplicity must be at least 1");
  std::sort(blocks.begin(), blocks.end(), root_less);
  FactoredPoly p;
  p.blocks_.reserve(blocks.size());
  for (auto& b : blocks) {
    if (!p.blocks_.empty() && p.blocks_.back().root == b.root)
      p.blocks_.back().multiplicity += b.multiplicity;
    else
      p.blocks_.push_back(std::move(b));
  }
  return p;
}

FactoredPoly FactoredPoly::linear(const Scalar& root, int multiplicity) {
  return from_roots({{root, multiplicity}});
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& b : blocks_) d += b.multiplicity;
  return d;
}

int FactoredPoly::multiplicity(const Scalar& root) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), RootBlock{root, 0}, root_less);
  return (it != blocks_.end() && it->root == root) ? it->multiplicity : 0;
}

FactoredPoly FactoredPoly::without(const Scalar& root) const {
  FactoredPoly p;
  p.blocks_.reserve(blocks_.size());
  for (const auto& b : blocks_)
    if (b.root != root) p.blocks_.push_back(b);
  return p;
}

std::string FactoredPoly::to_string() const {
  if (blocks_.empty()) return "1";
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += '*';
    Scalar offset = -b.root;
    out += "(h";
    if (!offset.is_zero()) {
      std::string s = offset.to_string();
      if (s.front() != '-') out += '+';
      out += s;
    }
    out += ')';
    if (b.multiplicity != 1) out += "^" + std::to_string(b.multiplicity);
  }
  return out;
}

FactoredPoly parse_poly(std::string_view text) {
  detail::LinearParser p(text);
  if (p.at_end()) p.fail("empty polynomial");
  std::vector<RootBlock> blocks;
  bool first = true;
  while (!p.at_end()) {
    if (!first) p.accept('*');
    first = false;
    std::size_t factor_pos = p.pos();
    std::optional<Scalar> root;
    if (p.accept('(')) {
      detail::LinearForm f = p.linear(true);
      p.expect(')');
      if (f.h_coeff != 0) {
        // (c*h + s) = c*(h - (-s/c)); the unit c is dropped.
        root = -(f.rest * Rational(1 / f.h_coeff));
      } else if (f.rest.is_zero()) {
        throw parse_error("the zero polynomial is not supported", factor_pos);
      } else {
        throw parse_error("factor does not involve h", factor_pos);
      }
    } else if (p.at_identifier()) {
      if (p.identifier() != "h") throw parse_error("expected 'h' or '('", factor_pos);
      root = Scalar(0);
    } else {
      // A bare nonzero rational constant; dropped.
      detail::LinearForm f = p.linear(false);
      if (!f.rest.is_rational()) throw parse_error("expected a factor", factor_pos);
      if (f.rest.is_zero()) throw parse_error("the zero polynomial is not supported", factor_pos);
    }
    int exponent = 1;
    if (p.accept('^')) {
      std::size_t at = p.pos();
      mpz_class e = p.integer();
      if (e < 1) throw parse_error("exponent must be at least 1", at);
      if (!e.fits_sint_p()) throw parse_error("exponent too large", at);
      exponent = static_cast<int>(e.get_si());
    }
    if (root) blocks.push_back({std::move(*root), exponent});
  }
  return FactoredPoly::from_roots(std::move(blocks));
}

FactoredPoly shift(const FactoredPoly& v, const Scalar& c) {
  if (c.is_zero()) return v;
  std::vector<RootBlock> blocks;
  blocks.reserve(v.blocks().size());
  for (const auto& b : v.blocks()) blocks.push_back({b.root - c, b.multiplicity});
  return FactoredPoly::from_roots(std::move(blocks));
}

FactoredPoly reflect(const FactoredPoly& v, const Scalar& c) {
  std::vector<RootBlock> blocks;
  blocks.reserve(v.blocks().size());
  for (const auto& b : v.blocks()) blocks.push_back({c - b.root, b.multiplicity});
  return FactoredPoly::from_roots(std::move(blocks));
}

FactoredPoly multiply(const FactoredPoly& u, const FactoredPoly& w) {
  std::vector<RootBlock> blocks = u.blocks();
  blocks.insert(blocks.end(), w.blocks().begin(), w.blocks().end());
  return FactoredPoly::from_roots(std::move(blocks));
}

bool coprime(const FactoredPoly& u, const FactoredPoly& w) {
  const auto& x = u.blocks();
  const auto& y = w.blocks();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    auto c = x[i].root <=> y[j].root;
    if (c == 0) return false;
    if (c < 0)
      ++i;
    else
      ++j;
  }
  return true;
}

int multiplicity(const FactoredPoly& v, const Scalar& a) { return v.multiplicity(a); }

}  // namespace gwa
