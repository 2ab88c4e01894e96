#pragma once

// Recursive-descent reader for the shared textual grammar of scalars and
// factored polynomials. Internal to the library.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "gwa/errors.hpp"
#include "gwa/scalar.hpp"

namespace gwa::detail {

/// A linear form  c_h * h + s  where s is a Scalar. Symbol "h" is the
/// polynomial variable and never a Scalar symbol.
struct LinearForm {
  Rational h_coeff{0};
  Scalar rest;
};

class LinearParser {
 public:
  explicit LinearParser(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what, pos_);
  }

  /// expr := ['+'|'-'] term (('+'|'-') term)*
  LinearForm linear(bool allow_h) {
    LinearForm out;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    add_term(out, negative, allow_h);
    for (;;) {
      if (accept('+'))
        add_term(out, false, allow_h);
      else if (accept('-'))
        add_term(out, true, allow_h);
      else
        break;
    }
    return out;
  }

  /// A non-negative decimal integer literal.
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_identifier()) fail("expected identifier");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  // term := coeff ['*' ident] | ident
  // coeff := int ['/' int]
  void add_term(LinearForm& out, bool negative, bool allow_h) {
    Rational coeff = 1;
    std::string name;
    if (at_identifier()) {
      name = identifier();
    } else {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw parse_error("zero denominator", at);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      if (accept('*')) name = identifier();
    }
    if (negative) coeff = -coeff;
    if (name.empty()) {
      out.rest += Scalar(coeff);
    } else if (name == "h") {
      if (!allow_h) fail("the variable 'h' is not allowed in a scalar");
      out.h_coeff += coeff;
    } else {
      out.rest += Scalar::symbol(name, coeff);
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace gwa::detail
