#ifndef UQGLMN_LAURENT_POLY_HPP
#define UQGLMN_LAURENT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "uqglmn/errors.hpp"

namespace uqglmn {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient Laurent polynomial in q.
///
/// Stored densely from the lowest nonzero power upward. The zero polynomial
/// has no stored coefficients; otherwise the first and last stored
/// coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  LaurentPoly(BigInt constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) {
      coeffs_.push_back(std::move(constant));
    }
  }

  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT

  static LaurentPoly monomial(BigInt c, int exponent) {
    LaurentPoly p(std::move(c));
    p.low_ = p.is_zero() ? 0 : exponent;
    return p;
  }

  static LaurentPoly from_terms(std::map<int, BigInt> const& terms) {
    LaurentPoly p;
    if (terms.empty()) {
      return p;
    }
    p.low_ = terms.begin()->first;
    p.coeffs_.assign(terms.rbegin()->first - p.low_ + 1, BigInt(0));
    for (auto const& [e, c] : terms) {
      p.coeffs_[e - p.low_] += c;
    }
    p.trim();
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Only meaningful for nonzero polynomials.
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept {
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }

  BigInt const& trailing_coeff() const { return coeffs_.front(); }
  BigInt const& leading_coeff() const { return coeffs_.back(); }

  BigInt coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high_degree()) {
      return 0;
    }
    return coeffs_[exponent - low_];
  }

  std::map<int, BigInt> terms() const {
    std::map<int, BigInt> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) {
        out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
      }
    }
    return out;
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(
        coeffs_.begin(), coeffs_.end(), [](BigInt const& c) { return c != 0; }));
  }

  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_one() const { return is_constant() && !is_zero() && coeffs_[0] == 1; }
  bool is_single_term() const { return coeffs_.size() == 1; }

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) {
      p.low_ += k;
    }
    return p;
  }

  /// Substitution q -> q^-1.
  LaurentPoly bar() const {
    LaurentPoly p;
    if (is_zero()) {
      return p;
    }
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high_degree();
    return p;
  }

  /// Nonnegative gcd of all coefficients; zero for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (auto const& c : coeffs_) {
      if (c != 0) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) {
          break;
        }
      }
    }
    return abs(g);
  }

  LaurentPoly divided_by(BigInt const& d) const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) {
      c /= d;
    }
    return p;
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) {
      c = -c;
    }
    return p;
  }

  LaurentPoly& operator+=(LaurentPoly const& other) {
    if (other.is_zero()) {
      return *this;
    }
    if (is_zero()) {
      return *this = other;
    }
    int lo = std::min(low_, other.low_);
    int hi = std::max(high_degree(), other.high_degree());
    if (lo != low_ || hi != high_degree()) {
      std::vector<BigInt> grown(hi - lo + 1, BigInt(0));
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        grown[low_ - lo + i] = std::move(coeffs_[i]);
      }
      coeffs_ = std::move(grown);
      low_ = lo;
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[other.low_ - low_ + i] += other.coeffs_[i];
    }
    trim();
    return *this;
  }

  LaurentPoly& operator-=(LaurentPoly const& other) { return *this += -other; }

  friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }

  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) {
      return p;
    }
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    p.trim();
    return p;
  }

  LaurentPoly& operator*=(LaurentPoly const& other) { return *this = *this * other; }

  friend bool operator==(LaurentPoly const& a, LaurentPoly const& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(low_);
    for (auto const& c : coeffs_) {
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<long long>(c % 1000000007));
    }
    return h;
  }

  std::vector<BigInt> const& dense() const noexcept { return coeffs_; }

 private:
  void trim() {
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                             [](BigInt const& c) { return c != 0; });
    coeffs_.erase(last.base(), coeffs_.end());
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](BigInt const& c) { return c != 0; });
    low_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) {
      low_ = 0;
    }
  }

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

namespace detail {

  // Ordinary polynomials over Z, represented as LaurentPoly with low degree 0.

  inline LaurentPoly to_polynomial(LaurentPoly const& p) {
    return p.is_zero() ? p : p.shifted(-p.low_degree());
  }

  inline LaurentPoly primitive_part(LaurentPoly const& p) {
    if (p.is_zero()) {
      return p;
    }
    BigInt c = p.content();
    LaurentPoly out = c == 1 ? p : p.divided_by(c);
    return out.leading_coeff() < 0 ? -out : out;
  }

  // Some nonzero constant multiple of the remainder of a by b.
  inline LaurentPoly pseudo_remainder(LaurentPoly a, LaurentPoly const& b) {
    int const db = b.high_degree();
    BigInt const& lcb = b.leading_coeff();
    while (!a.is_zero() && a.high_degree() >= db) {
      BigInt lca = a.leading_coeff();
      int const shift = a.high_degree() - db;
      a = a * LaurentPoly(lcb) - b.shifted(shift) * LaurentPoly(lca);
      a = primitive_part(a);
    }
    return a;
  }

  /// Primitive gcd, positive leading coefficient, of two polynomials in Z[q]
  /// (q-power factors ignored).
  inline LaurentPoly polynomial_gcd(LaurentPoly a, LaurentPoly b) {
    a = primitive_part(to_polynomial(a));
    b = primitive_part(to_polynomial(b));
    if (a.is_zero()) {
      return b;
    }
    if (b.is_zero()) {
      return a;
    }
    if (a.high_degree() < b.high_degree()) {
      std::swap(a, b);
    }
    while (!b.is_zero()) {
      if (b.high_degree() == 0) {
        return LaurentPoly(1);
      }
      LaurentPoly r = primitive_part(to_polynomial(pseudo_remainder(a, b)));
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  /// Exact quotient a / b in Z[q]; throws if b does not divide a.
  inline LaurentPoly exact_quotient(LaurentPoly a, LaurentPoly const& b) {
    if (b.is_zero()) {
      throw DivisionByZero("polynomial division by zero");
    }
    std::map<int, BigInt> quotient;
    int const db = b.high_degree();
    while (!a.is_zero() && a.high_degree() >= db) {
      BigInt c = a.leading_coeff() / b.leading_coeff();
      if (c * b.leading_coeff() != a.leading_coeff()) {
        throw Error("inexact polynomial division");
      }
      int const shift = a.high_degree() - db;
      quotient[shift] += c;
      a -= b.shifted(shift) * LaurentPoly(c);
    }
    if (!a.is_zero()) {
      throw Error("inexact polynomial division");
    }
    return LaurentPoly::from_terms(quotient);
  }

}  // namespace detail

}  // namespace uqglmn

#endif  // UQGLMN_LAURENT_POLY_HPP
