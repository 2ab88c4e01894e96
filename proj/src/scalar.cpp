#include "gwa/scalar.hpp"

#include <algorithm>
#include <limits>

#include "linear_parser.hpp"

namespace gwa {

namespace {

// Merge `coeff * rhs` into `lhs`, both sorted by name, dropping zeros.
void merge_symbols(std::vector<std::pair<std::string, Rational>>& lhs,
                   const std::vector<std::pair<std::string, Rational>>& rhs, int sign) {
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == lhs.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
      if (c != 0) out.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  lhs = std::move(out);
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Scalar Scalar::symbol(std::string name, Rational coeff) {
  coeff.canonicalize();
  Scalar s;
  if (name == unit_name) {
    s.constant_ = std::move(coeff);
  } else if (coeff != 0) {
    s.symbols_.emplace_back(std::move(name), std::move(coeff));
  }
  return s;
}

Rational Scalar::coefficient(std::string_view name) const {
  if (name == unit_name) return constant_;
  for (const auto& [sym, c] : symbols_)
    if (sym == name) return c;
  return 0;
}

bool Scalar::is_integer() const {
  return symbols_.empty() && constant_.get_den() == 1;
}

Scalar Scalar::mod_z_representative() const {
  Scalar out = *this;
  mpz_class floor_part;
  mpz_fdiv_q(floor_part.get_mpz_t(), constant_.get_num_mpz_t(), constant_.get_den_mpz_t());
  out.constant_ -= floor_part;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  constant_ += other.constant_;
  if (!other.symbols_.empty()) merge_symbols(symbols_, other.symbols_, +1);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  constant_ -= other.constant_;
  if (!other.symbols_.empty()) merge_symbols(symbols_, other.symbols_, -1);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& factor) {
  if (factor == 0) {
    symbols_.clear();
    constant_ = 0;
    return *this;
  }
  constant_ *= factor;
  for (auto& [name, c] : symbols_) c *= factor;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.constant_ = -out.constant_;
  for (auto& [name, c] : out.symbols_) c = -c;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.constant_ == b.constant_ && a.symbols_ == b.symbols_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  const auto& x = a.symbols_;
  const auto& y = b.symbols_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].first <=> y[i].first; c != 0) return c;
    int q = cmp(x[i].second, y[i].second);
    if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.size() != y.size()) return x.size() <=> y.size();
  int q = cmp(a.constant_, b.constant_);
  if (q == 0) return std::strong_ordering::equal;
  return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Scalar::to_string() const {
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  };
  for (const auto& [name, c] : symbols_) {
    if (c == 1)
      append(name);
    else if (c == -1)
      append("-" + name);
    else
      append(rational_to_string(c) + "*" + name);
  }
  if (constant_ != 0 || out.empty()) append(rational_to_string(constant_));
  return out;
}

Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }

bool is_integer(const Scalar& a) { return a.is_integer(); }

std::optional<std::int64_t> integer_difference(const Scalar& a, const Scalar& b) {
  if (a.symbols() != b.symbols()) return std::nullopt;
  Rational d = a.constant() - b.constant();
  if (d.get_den() != 1) return std::nullopt;
  const mpz_class& n = d.get_num();
  if (!n.fits_slong_p()) throw domain_error("integer difference does not fit in 64 bits");
  return static_cast<std::int64_t>(n.get_si());
}

Scalar parse_scalar(std::string_view text) {
  detail::LinearParser p(text);
  if (p.at_end()) p.fail("empty scalar");
  Scalar s = p.linear(false).rest;
  if (!p.at_end()) p.fail("unexpected trailing input");
  return s;
}

}  // namespace gwa
