#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqglmn;

namespace {

Element E(Signature const& sig, int a, int b) { return Element::generator(sig, a, b); }
Element K(Signature const& sig, int a, int halves = 2) { return Element::cartan(sig, a, halves); }

}  // namespace

TEST(NormalOrder, Examples) {
  Signature const s21(2, 1);
  Coefficient const dbar = Coefficient::delta().inverse();
  EXPECT_EQ(normal_order(E(s21, 1, 2) * E(s21, 2, 1)),
            E(s21, 2, 1) * E(s21, 1, 2) + dbar * (K(s21, 1) * K(s21, 2, -2)) -
                dbar * (K(s21, 1, -2) * K(s21, 2)));
  Signature const s11(1, 1);
  EXPECT_TRUE(normal_order(E(s11, 1, 2) * E(s11, 1, 2)).is_zero());
  // E^2_1 K_1 = q K_1 E^2_1; lowering letters sit left of the Cartan block,
  // so the left side is the normal form of both.
  Element const lowered = E(s11, 2, 1) * K(s11, 1);
  EXPECT_EQ(normal_order(lowered), lowered);
  EXPECT_EQ(normal_order(Coefficient::q_power(1) * (K(s11, 1) * E(s11, 2, 1))), lowered);
  EXPECT_EQ(normal_order(K(s11, 1) * E(s11, 1, 2)), K(s11, 1) * E(s11, 1, 2));
  EXPECT_EQ(normal_order(K(s11, 1) * K(s11, 1, -2)), Element::identity(s11));
}

TEST(NormalOrder, CartanBlockMerges) {
  Signature const sig(2, 1);
  Element const x = K(sig, 3) * K(sig, 1, 1) * K(sig, 3, 2) * K(sig, 1, 1);
  EXPECT_EQ(normal_order(x), K(sig, 1, 2) * K(sig, 3, 4));
}

TEST(IsNormal, Examples) {
  Signature const s11(1, 1);
  EXPECT_TRUE(is_normal(E(s11, 2, 1) * E(s11, 1, 2)));
  EXPECT_FALSE(is_normal(E(s11, 1, 2) * E(s11, 2, 1)));
  Signature const s21(2, 1);
  EXPECT_TRUE(is_normal(E(s21, 3, 1) * E(s21, 3, 2)));
  EXPECT_FALSE(is_normal(E(s21, 3, 2) * E(s21, 3, 1)));
  // odd squares are never normal, even squares are
  EXPECT_FALSE(is_normal(E(s21, 3, 1) * E(s21, 3, 1)));
  EXPECT_TRUE(is_normal(E(s21, 2, 1) * E(s21, 2, 1)));
  EXPECT_FALSE(is_normal(K(s21, 2) * K(s21, 1)));
}

TEST(NormalOrder, NonsimpleOddSquaresVanish) {
  for (int total = 2; total <= 5; ++total) {
    for (int m = 1; m < total; ++m) {
      Signature const sig(m, total - m);
      for (int a = 1; a <= total; ++a) {
        for (int b = 1; b <= total; ++b) {
          if (sig.grade(a) != sig.grade(b)) {
            EXPECT_TRUE(normal_order(E(sig, a, b) * E(sig, a, b)).is_zero());
          }
        }
      }
    }
  }
}

TEST(NormalOrder, BudgetExceededCarriesMonomial) {
  Signature const sig(2, 2);
  Element const x = E(sig, 1, 4) * E(sig, 4, 1) * E(sig, 1, 4) * E(sig, 4, 2);
  try {
    normal_order(x, NormalOrderConfig{3});
    FAIL() << "budget should have fired";
  } catch (BudgetExceeded const& e) {
    EXPECT_FALSE(e.monomial().empty());
  }
}

TEST(NormalOrder, SignatureMismatch) {
  Normalizer nz(Signature(1, 1));
  EXPECT_THROW(nz.normal_order(E(Signature(2, 1), 1, 2)), SignatureMismatch);
}

class NormalizerProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{99};
};

TEST_F(NormalizerProperties, IdempotentAndNormal) {
  for (int i = 0; i < 150; ++i) {
    Signature const sig = testsupport::random_signature(rng, 4);
    Element x(sig);
    for (int t = 0; t < 3; ++t) {
      Word w;
      for (int k = 0; k < 3; ++k) {
        Letter l = testsupport::random_letter(rng, sig);
        if (l.is_cartan()) l = Letter::cartan(l.index(), 2 * (l.halves() / 2));
        w.push_back(l);
      }
      x += Element::monomial(sig, testsupport::random_coefficient(rng), w);
    }
    Element const n = normal_order(x);
    EXPECT_TRUE(is_normal(n));
    EXPECT_EQ(normal_order(n), n);
  }
}

TEST_F(NormalizerProperties, Linear) {
  for (int i = 0; i < 100; ++i) {
    Signature const sig = testsupport::random_signature(rng, 4);
    auto pair = [&] {
      return Element::monomial(sig, testsupport::random_coefficient(rng),
                               {testsupport::random_letter(rng, sig, false),
                                testsupport::random_letter(rng, sig, false)});
    };
    Element const x = pair();
    Element const y = pair();
    Coefficient const c = testsupport::random_coefficient(rng);
    EXPECT_EQ(normal_order(x + c * y), normal_order(x) + c * normal_order(y));
  }
}

TEST(NormalizerInvariants, OmegaCompatibleOnSweepInputs) {
  for (int total = 2; total <= 4; ++total) {
    for (int m = 1; m < total; ++m) {
      Signature const sig(m, total - m);
      Normalizer nz(sig);
      auto const gens = generators_up_to(sig, total - 1);
      for (Letter x : gens) {
        for (Letter y : gens) {
          Element const xy = Element::monomial(sig, 1, {x, y});
          EXPECT_EQ(nz.normal_order(omega(xy)), nz.normal_order(omega(nz.normal_order(xy))))
              << print_letter(x) << print_letter(y) << " " << sig.to_string();
        }
      }
    }
  }
}

TEST(NormalizerInvariants, WeightBlocksPreserved) {
  for (int total = 2; total <= 4; ++total) {
    for (int m = 1; m < total; ++m) {
      Signature const sig(m, total - m);
      Normalizer nz(sig);
      auto const gens = generators_up_to(sig, total - 1);
      for (Letter x : gens) {
        for (Letter y : gens) {
          for (Letter z : {gens.front(), gens.back()}) {
            Word const w{x, y, z};
            EXPECT_TRUE(conserves(nz.normal_order(Element::monomial(sig, 1, w)),
                                  weight_of(w, sig), grade_of(w, sig)));
          }
        }
      }
    }
  }
}
