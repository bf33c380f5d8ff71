#ifndef UQGLMN_EXPR_IO_HPP
#define UQGLMN_EXPR_IO_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "uqglmn/coefficient.hpp"
#include "uqglmn/element.hpp"
#include "uqglmn/errors.hpp"
#include "uqglmn/signature.hpp"

// Text grammar (whitespace insignificant):
//
//   element  := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := atom ('^' exponent)?
//   exponent := sint | '(' sint '/' '2' ')'
//   atom     := 'q' | int | 'E[' int ',' int ']' | 'K[' int ']' | '(' element ')'
//
// Division is only allowed by nonzero scalars. Half-integer exponents are
// only allowed on K.

namespace uqglmn {

namespace detail {

  inline std::string term_string(BigInt const& magnitude, int exponent) {
    std::string const c = magnitude.str();
    if (exponent == 0) {
      return c;
    }
    std::string const qpart = exponent == 1 ? "q" : "q^" + std::to_string(exponent);
    return magnitude == 1 ? qpart : c + "*" + qpart;
  }

  // Signed single term, e.g. "-2*q^3".
  inline std::string signed_term_string(BigInt const& c, int exponent) {
    return (c < 0 ? "-" : "") + term_string(abs(c), exponent);
  }

  inline std::string poly_string(LaurentPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::string out;
    auto const& dense = p.dense();
    for (int i = static_cast<int>(dense.size()) - 1; i >= 0; --i) {
      BigInt const& c = dense[static_cast<std::size_t>(i)];
      if (c == 0) {
        continue;
      }
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? "-" : "+";
      }
      out += term_string(abs(c), p.low_degree() + i);
    }
    return out;
  }

}  // namespace detail

/// Canonical text of a coefficient, e.g. "q-q^-1" or "q/(q^2-1)".
inline std::string print_coefficient(Coefficient const& c) {
  if (c.is_laurent()) {
    return detail::poly_string(c.numerator());
  }
  LaurentPoly const& num = c.numerator();
  LaurentPoly const& den = c.denominator();
  std::string out = num.is_single_term()
                        ? detail::signed_term_string(num.trailing_coeff(), num.low_degree())
                        : "(" + detail::poly_string(num) + ")";
  out += "/";
  out += den.is_single_term() ? detail::poly_string(den) : "(" + detail::poly_string(den) + ")";
  return out;
}

inline std::string print_letter(Letter const& l) {
  if (l.is_generator()) {
    return "E[" + std::to_string(l.row()) + "," + std::to_string(l.col()) + "]";
  }
  std::string out = "K[" + std::to_string(l.index()) + "]";
  int const h = l.halves();
  if (h % 2 != 0) {
    return out + "^(" + std::to_string(h) + "/2)";
  }
  if (h != 2) {
    out += "^" + std::to_string(h / 2);
  }
  return out;
}

inline std::string print_word(Word const& w) {
  std::string out;
  for (auto const& l : w) {
    if (!out.empty()) {
      out += "*";
    }
    out += print_letter(l);
  }
  return out;
}

/// Deterministic text: monomials in key order, canonical coefficients.
inline std::string print_element(Element const& x) {
  if (x.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto const& [w, c] : x.terms()) {
    std::string const body = print_word(w);
    bool negative = false;
    std::string piece;
    if (c.is_laurent() && c.numerator().is_single_term()) {
      BigInt const& v = c.numerator().trailing_coeff();
      int const e = c.numerator().low_degree();
      negative = v < 0;
      std::string const mag = (abs(v) == 1 && e == 0) ? "" : detail::term_string(abs(v), e);
      if (mag.empty()) {
        piece = body.empty() ? "1" : body;
      } else {
        piece = body.empty() ? mag : mag + "*" + body;
      }
    } else {
      piece = "(" + print_coefficient(c) + ")";
      if (!body.empty()) {
        piece += "*" + body;
      }
    }
    if (out.empty()) {
      out = negative ? "-" + piece : piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

namespace detail {

  class Parser {
   public:
    Parser(std::string_view text, Signature sig) : text_(text), sig_(sig) {}

    Element parse() {
      Element e = element();
      skip_space();
      if (pos_ != text_.size()) {
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
      }
      return e;
    }

   private:
    [[noreturn]] void fail(std::string const& what) const { throw ParseError(what, pos_); }

    void skip_space() {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    bool accept(char c) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == c) {
        ++pos_;
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!accept(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    std::optional<char> peek() {
      skip_space();
      if (pos_ < text_.size()) {
        return text_[pos_];
      }
      return std::nullopt;
    }

    BigInt integer() {
      skip_space();
      std::size_t const start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (start == pos_) {
        fail("expected integer");
      }
      return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer() {
      std::size_t const start = pos_;
      BigInt v = integer();
      if (v > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      return static_cast<int>(v);
    }

    int signed_integer() {
      bool const negative = accept('-');
      int const v = small_integer();
      return negative ? -v : v;
    }

    int index() {
      skip_space();
      std::size_t const start = pos_;
      int const a = small_integer();
      if (!sig_.contains(a)) {
        pos_ = start;
        fail("index " + std::to_string(a) + " out of range 1.." + std::to_string(sig_.size()));
      }
      return a;
    }

    Element element() {
      Element e(sig_);
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else {
        accept('+');
      }
      e.add_scaled(term(), negative ? -1 : 1);
      while (true) {
        if (accept('+')) {
          e += term();
        } else if (accept('-')) {
          e -= term();
        } else {
          return e;
        }
      }
    }

    Element term() {
      Element e = factor();
      while (true) {
        if (accept('*')) {
          e = e * factor();
        } else if (accept('/')) {
          std::size_t const at = pos_;
          Element d = factor();
          if (!d.is_scalar() || d.is_zero()) {
            pos_ = at;
            fail("division requires a nonzero scalar divisor");
          }
          e = d.scalar_value().inverse() * e;
        } else {
          return e;
        }
      }
    }

    // Exponent in halves; `half` reports whether the (p/2) form was used.
    std::pair<int, bool> exponent() {
      std::size_t const at = pos_;
      if (accept('(')) {
        int const p = signed_integer();
        if (accept('/')) {
          skip_space();
          std::size_t const two = pos_;
          if (small_integer() != 2) {
            pos_ = two;
            fail("malformed exponent: only halves are supported");
          }
          expect(')');
          return {p, true};
        }
        expect(')');
        return {2 * p, false};
      }
      skip_space();
      if (pos_ >= text_.size() ||
          !(text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        pos_ = at;
        fail("malformed exponent");
      }
      return {2 * signed_integer(), false};
    }

    Element power(Element const& base, int k, std::size_t at) {
      if (k < 0) {
        if (!base.is_scalar() || base.is_zero()) {
          pos_ = at;
          fail("malformed exponent: negative power of a non-scalar");
        }
        return power(Element::scalar(sig_, base.scalar_value().inverse()), -k, at);
      }
      Element out = Element::identity(sig_);
      for (int i = 0; i < k; ++i) {
        out = out * base;
      }
      return out;
    }

    Element factor() {
      skip_space();
      std::size_t const start = pos_;
      auto const c = peek();
      if (!c) {
        fail("unexpected end of input");
      }
      if (*c == 'K') {
        ++pos_;
        expect('[');
        int const a = index();
        expect(']');
        int halves = 2;
        if (accept('^')) {
          halves = exponent().first;
        }
        return Element::monomial(sig_, 1, {Letter::cartan(a, halves)});
      }
      Element base(sig_);
      if (*c == 'q') {
        ++pos_;
        base = Element::scalar(sig_, Coefficient::q_power(1));
      } else if (*c == 'E') {
        ++pos_;
        expect('[');
        int const a = index();
        expect(',');
        int const b = index();
        expect(']');
        if (a == b) {
          pos_ = start;
          fail("E[a,b] requires a != b");
        }
        base = Element::generator(sig_, a, b);
      } else if (*c == '(') {
        ++pos_;
        base = element();
        expect(')');
      } else if (std::isdigit(static_cast<unsigned char>(*c))) {
        base = Element::scalar(sig_, Coefficient(LaurentPoly(integer())));
      } else {
        fail("unexpected '" + std::string(1, *c) + "'");
      }
      if (accept('^')) {
        std::size_t const at = pos_;
        auto const [halves, half_form] = exponent();
        if (half_form) {
          pos_ = at;
          fail("malformed exponent: half-integer powers are only allowed on K");
        }
        return power(base, halves / 2, at);
      }
      return base;
    }

    std::string_view text_;
    Signature sig_;
    std::size_t pos_ = 0;
  };

}  // namespace detail

/// Parses the textual form into a raw (unnormalized) element.
inline Element parse_element(std::string_view text, Signature sig) {
  return detail::Parser(text, sig).parse();
}

}  // namespace uqglmn

#endif  // UQGLMN_EXPR_IO_HPP
