#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqglmn;
using testsupport::evaluate;
using testsupport::Rational;

namespace {

LaurentPoly q(int k = 1) { return LaurentPoly::monomial(1, k); }
Coefficient Q(int k = 1) { return Coefficient::q_power(k); }

}  // namespace

TEST(Coefficient, AddExamples) {
  Coefficient const d = Coefficient::delta();
  EXPECT_EQ(d + Q(-1), Q(1));
  EXPECT_EQ(d + Coefficient(0), d);
  Coefficient const dbar = d.inverse();
  Coefficient const sum = dbar + dbar;
  EXPECT_EQ(sum, Coefficient(2) / d);
  EXPECT_EQ(sum, Coefficient::fraction(LaurentPoly::monomial(2, 1), q(2) - LaurentPoly(1)));
  EXPECT_EQ(print_coefficient(sum), "2*q/(q^2-1)");
}

TEST(Coefficient, MulExamples) {
  Coefficient const d = Coefficient::delta();
  EXPECT_TRUE((d * d.inverse()).is_one());
  EXPECT_TRUE((Q(1) * Q(-1)).is_one());
  Coefficient const r = Coefficient::fraction(q() + LaurentPoly(1), q() - LaurentPoly(1));
  EXPECT_EQ(r * Coefficient(q() - LaurentPoly(1)), Coefficient(q() + LaurentPoly(1)));
}

TEST(Coefficient, InverseExamples) {
  EXPECT_EQ(Q(1).inverse(), Q(-1));
  Coefficient const dbar = Coefficient::delta().inverse();
  EXPECT_EQ(dbar, Coefficient::fraction(q(), q(2) - LaurentPoly(1)));
  EXPECT_EQ(print_coefficient(dbar), "q/(q^2-1)");
  EXPECT_THROW(Coefficient(0).inverse(), DivisionByZero);
  EXPECT_THROW(Coefficient(1) / Coefficient(0), DivisionByZero);
}

TEST(Coefficient, BarExamples) {
  EXPECT_EQ(Q(2).bar(), Q(-2));
  EXPECT_EQ(Coefficient::delta().bar(), -Coefficient::delta());
  Coefficient const x = Coefficient::fraction(q(2) + LaurentPoly(1), q());
  EXPECT_EQ(x.bar(), x);
}

TEST(Coefficient, IndexShorthands) {
  Signature const sig(2, 1);
  EXPECT_EQ(q_index(1, sig), Q(1));
  EXPECT_EQ(q_index(3, sig), Q(-1));
  EXPECT_EQ(delta_index(3, sig), -Coefficient::delta());
  EXPECT_EQ(delta_index(1, sig), Coefficient::delta());
  EXPECT_TRUE((delta_index(3, sig) * delta_index_inverse(3, sig)).is_one());
}

TEST(Coefficient, CanonicalFormIsStructural) {
  // The same rational function built two ways compares equal.
  Coefficient const a = Coefficient::fraction(q(3) - q(1), q(4) - q(2));
  Coefficient const b = Coefficient::fraction(LaurentPoly(1), q());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, Q(-1));
  EXPECT_TRUE(a.is_laurent());
  Coefficient const c = Coefficient::fraction(LaurentPoly(-6), LaurentPoly(-4) * (q() - LaurentPoly(1)));
  EXPECT_EQ(print_coefficient(c), "3/(2*q-2)");
}

class CoefficientOracle : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};

  // Compares two coefficients at several random points where both are defined.
  void expect_same_values(Coefficient const& x, Coefficient const& y,
                          std::vector<Coefficient> const& inputs) {
    int checked = 0;
    for (int attempt = 0; attempt < 20 && checked < 3; ++attempt) {
      Rational const pt = testsupport::random_point(rng);
      bool defined = true;
      for (auto const& c : inputs) {
        defined = defined && evaluate(c.denominator(), pt) != 0;
      }
      if (!defined) {
        continue;
      }
      ASSERT_EQ(evaluate(x, pt), evaluate(y, pt));
      ++checked;
    }
    EXPECT_GT(checked, 0);
  }
};

TEST_F(CoefficientOracle, OperationsAgreeWithEvaluation) {
  for (int i = 0; i < 400; ++i) {
    Coefficient const x = testsupport::random_coefficient(rng);
    Coefficient const y = testsupport::random_coefficient(rng);
    Rational const pt = testsupport::random_point(rng);
    if (evaluate(x.denominator(), pt) == 0 || evaluate(y.denominator(), pt) == 0) {
      continue;
    }
    Rational const vx = evaluate(x, pt);
    Rational const vy = evaluate(y, pt);
    EXPECT_EQ(evaluate(x + y, pt), vx + vy);
    EXPECT_EQ(evaluate(x - y, pt), vx - vy);
    EXPECT_EQ(evaluate(x * y, pt), vx * vy);
    if (!y.is_zero() && vy != 0) {
      EXPECT_EQ(evaluate(x / y, pt), vx / vy);
    }
    EXPECT_EQ(evaluate(x.bar(), 1 / pt), vx);
  }
}

TEST_F(CoefficientOracle, RingAxioms) {
  for (int i = 0; i < 300; ++i) {
    Coefficient const x = testsupport::random_coefficient(rng);
    Coefficient const y = testsupport::random_coefficient(rng);
    Coefficient const z = testsupport::random_coefficient(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + Coefficient(0), x);
    EXPECT_EQ(x * Coefficient(1), x);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(x - x, Coefficient(0));
    expect_same_values(x * (y + z), x * y + x * z, {x, y, z});
  }
}

TEST_F(CoefficientOracle, BarIsRingInvolution) {
  for (int i = 0; i < 300; ++i) {
    Coefficient const x = testsupport::random_coefficient(rng);
    Coefficient const y = testsupport::random_coefficient(rng);
    EXPECT_EQ(x.bar().bar(), x);
    EXPECT_EQ((x * y).bar(), x.bar() * y.bar());
    EXPECT_EQ((x + y).bar(), x.bar() + y.bar());
  }
}

TEST_F(CoefficientOracle, CanonicalizationIsIdempotent) {
  for (int i = 0; i < 300; ++i) {
    Coefficient const x = testsupport::random_coefficient(rng);
    Coefficient const again = Coefficient::fraction(x.numerator(), x.denominator());
    EXPECT_EQ(again.numerator(), x.numerator());
    EXPECT_EQ(again.denominator(), x.denominator());
    EXPECT_EQ(x.denominator().low_degree(), 0);
    EXPECT_GT(x.denominator().leading_coeff(), 0);
    EXPECT_EQ(std::hash<Coefficient>{}(again), std::hash<Coefficient>{}(x));
  }
}

TEST(LaurentPoly, GcdAndQuotient) {
  LaurentPoly const a = (q() - LaurentPoly(1)) * (q() + LaurentPoly(2));
  LaurentPoly const b = (q() - LaurentPoly(1)) * (q(2) + LaurentPoly(1));
  LaurentPoly const g = detail::polynomial_gcd(a, b);
  EXPECT_EQ(g, q() - LaurentPoly(1));
  EXPECT_EQ(detail::exact_quotient(a, g), q() + LaurentPoly(2));
}
