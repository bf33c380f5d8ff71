// Shared generators and the evaluation oracle used by the test suites.
#ifndef UQGLMN_TESTS_SUPPORT_HPP
#define UQGLMN_TESTS_SUPPORT_HPP

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "uqglmn/uqglmn.hpp"

namespace testsupport {

using Rational = boost::multiprecision::cpp_rational;
using uqglmn::BigInt;
using uqglmn::Coefficient;
using uqglmn::Element;
using uqglmn::LaurentPoly;
using uqglmn::Letter;
using uqglmn::Signature;
using uqglmn::Word;

// Evaluates p(q) by Horner-free term summation; q must be nonzero.
inline Rational evaluate(LaurentPoly const& p, Rational const& q) {
  Rational out = 0;
  for (auto const& [e, c] : p.terms()) {
    Rational power = 1;
    for (int i = 0; i < std::abs(e); ++i) {
      power *= q;
    }
    out += Rational(c) * (e < 0 ? 1 / power : power);
  }
  return out;
}

inline Rational evaluate(Coefficient const& c, Rational const& q) {
  return evaluate(c.numerator(), q) / evaluate(c.denominator(), q);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 3, int max_exp = 3,
                               int max_coeff = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exps(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeffs(-max_coeff, max_coeff);
  LaurentPoly p;
  for (int i = nterms(rng); i > 0; --i) {
    p = p + LaurentPoly::monomial(coeffs(rng), exps(rng));
  }
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  while (p.is_zero()) {
    p = random_poly(rng);
  }
  return p;
}

inline Coefficient random_coefficient(std::mt19937_64& rng) {
  if (std::bernoulli_distribution(0.3)(rng)) {
    return random_poly(rng);
  }
  return Coefficient::fraction(random_poly(rng), random_nonzero_poly(rng));
}

// Nonzero rational with small numerator and denominator, avoiding 1 and -1
// so that denominators like q^2-1 stay invertible at the sample point.
inline Rational random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  while (true) {
    Rational r(num(rng), den(rng));
    if (r != 0 && r != 1 && r != -1) {
      return r;
    }
  }
}

inline Letter random_letter(std::mt19937_64& rng, Signature const& sig, bool with_cartan = true) {
  std::uniform_int_distribution<int> idx(1, sig.size());
  if (with_cartan && std::bernoulli_distribution(0.25)(rng)) {
    std::uniform_int_distribution<int> halves(-4, 4);
    return Letter::cartan(idx(rng), halves(rng));
  }
  int a = idx(rng);
  int b = idx(rng);
  while (b == a) {
    b = idx(rng);
  }
  return Letter::gen(a, b);
}

inline Word random_word(std::mt19937_64& rng, Signature const& sig, int max_len = 4) {
  std::uniform_int_distribution<int> len(0, max_len);
  Word w;
  for (int i = len(rng); i > 0; --i) {
    w.push_back(random_letter(rng, sig));
  }
  return w;
}

inline Element random_element(std::mt19937_64& rng, Signature const& sig, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  Element x(sig);
  for (int i = nterms(rng); i > 0; --i) {
    x += Element::monomial(sig, random_coefficient(rng), random_word(rng, sig));
  }
  return x;
}

inline Signature random_signature(std::mt19937_64& rng, int max_total = 5) {
  std::uniform_int_distribution<int> total(2, max_total);
  int const t = total(rng);
  std::uniform_int_distribution<int> m(1, t - 1);
  int const mm = m(rng);
  return Signature(mm, t - mm);
}

}  // namespace testsupport

namespace uqglmn {

// Readable gtest failure messages.
inline void PrintTo(Element const& x, std::ostream* os) { *os << print_element(x); }
inline void PrintTo(Coefficient const& c, std::ostream* os) { *os << print_coefficient(c); }
inline void PrintTo(CaseId id, std::ostream* os) { *os << to_string(id); }

}  // namespace uqglmn

#endif  // UQGLMN_TESTS_SUPPORT_HPP
