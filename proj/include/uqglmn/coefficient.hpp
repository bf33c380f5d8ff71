#ifndef UQGLMN_COEFFICIENT_HPP
#define UQGLMN_COEFFICIENT_HPP

#include <cstddef>
#include <utility>

#include "uqglmn/errors.hpp"
#include "uqglmn/laurent_poly.hpp"

namespace uqglmn {

/// Element of the field of rational functions in q over the integers.
///
/// Always held in canonical form, so equality is structural:
///   - the denominator is an ordinary polynomial (lowest power q^0) with a
///     positive leading coefficient; q-power units live in the numerator,
///   - numerator and denominator share no nonconstant polynomial factor and
///     no common integer content,
///   - zero is 0/1.
class Coefficient {
 public:
  Coefficient() : den_(1) {}
  Coefficient(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Coefficient(int c) : Coefficient(LaurentPoly(c)) {}              // NOLINT

  static Coefficient fraction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) {
      throw DivisionByZero("zero denominator");
    }
    Coefficient c;
    c.num_ = std::move(num);
    c.den_ = std::move(den);
    c.canonicalize();
    return c;
  }

  static Coefficient q_power(int k) { return LaurentPoly::monomial(1, k); }

  /// q - q^-1
  static Coefficient delta() {
    return LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
  }

  LaurentPoly const& numerator() const noexcept { return num_; }
  LaurentPoly const& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Coefficient operator-() const {
    Coefficient c = *this;
    c.num_ = -c.num_;
    return c;
  }

  friend Coefficient operator+(Coefficient const& x, Coefficient const& y) {
    if (x.is_zero()) {
      return y;
    }
    if (y.is_zero()) {
      return x;
    }
    if (x.is_laurent() && y.is_laurent()) {
      return Coefficient(x.num_ + y.num_);
    }
    if (x.den_ == y.den_) {
      return fraction(x.num_ + y.num_, x.den_);
    }
    return fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }

  friend Coefficient operator-(Coefficient const& x, Coefficient const& y) { return x + (-y); }

  friend Coefficient operator*(Coefficient const& x, Coefficient const& y) {
    if (x.is_zero() || y.is_zero()) {
      return Coefficient();
    }
    if (x.is_laurent() && y.is_laurent()) {
      return Coefficient(x.num_ * y.num_);
    }
    return fraction(x.num_ * y.num_, x.den_ * y.den_);
  }

  Coefficient inverse() const {
    if (is_zero()) {
      throw DivisionByZero("inverse of zero coefficient");
    }
    return fraction(den_, num_);
  }

  friend Coefficient operator/(Coefficient const& x, Coefficient const& y) {
    return x * y.inverse();
  }

  Coefficient& operator+=(Coefficient const& y) { return *this = *this + y; }
  Coefficient& operator-=(Coefficient const& y) { return *this = *this - y; }
  Coefficient& operator*=(Coefficient const& y) { return *this = *this * y; }

  /// The bar involution q -> q^-1.
  Coefficient bar() const { return fraction(num_.bar(), den_.bar()); }

  friend bool operator==(Coefficient const& x, Coefficient const& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    // Absorb the q-power unit of the denominator into the numerator.
    int const shift = den_.low_degree();
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);

    if (den_.high_degree() > 0) {
      LaurentPoly g = detail::polynomial_gcd(num_, den_);
      if (g.high_degree() > 0) {
        int const nshift = num_.low_degree();
        num_ = detail::exact_quotient(num_.shifted(-nshift), g).shifted(nshift);
        den_ = detail::exact_quotient(den_, g);
      }
    }
    BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.leading_coeff() < 0) {
      c = -c;
    }
    if (c != 1) {
      num_ = num_.divided_by(c);
      den_ = den_.divided_by(c);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace uqglmn

template <>
struct std::hash<uqglmn::Coefficient> {
  std::size_t operator()(uqglmn::Coefficient const& c) const { return c.hash(); }
};

#endif  // UQGLMN_COEFFICIENT_HPP
