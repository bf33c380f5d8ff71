#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqglmn;

namespace {

Element E(Signature const& sig, int a, int b) { return Element::generator(sig, a, b); }
Element K(Signature const& sig, int a, int halves = 2) { return Element::cartan(sig, a, halves); }

std::size_t error_position(std::string const& text, Signature const& sig) {
  try {
    parse_element(text, sig);
  } catch (ParseError const& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Parse, Examples) {
  Signature const sig(2, 1);
  EXPECT_EQ(parse_element("E[2,1]*E[1,2]", sig), E(sig, 2, 1) * E(sig, 1, 2));
  EXPECT_EQ(parse_element("(q - q^-1)*K[1]^-1", sig), Coefficient::delta() * K(sig, 1, -2));
  EXPECT_THROW(parse_element("E[1,1]", sig), ParseError);
}

TEST(Parse, Errors) {
  Signature const sig(2, 1);
  EXPECT_EQ(error_position("E[1,4]", sig), 4u);
  EXPECT_EQ(error_position("E[1,2] +", sig), 8u);
  EXPECT_THROW(parse_element("E[1,2]^(1/2)", sig), ParseError);
  EXPECT_THROW(parse_element("K[1]^(1/3)", sig), ParseError);
  EXPECT_THROW(parse_element("E[1,2]/E[2,1]", sig), ParseError);
  EXPECT_THROW(parse_element("1/(q-q)", sig), ParseError);
  EXPECT_THROW(parse_element("E[1,2] E[2,1]", sig), ParseError);
  EXPECT_THROW(parse_element("K[1]^", sig), ParseError);
  EXPECT_THROW(parse_element("E[1,2]^-1", sig), ParseError);
}

TEST(Parse, Forms) {
  Signature const sig(2, 1);
  EXPECT_EQ(parse_element("K[3]^(3/2)", sig), K(sig, 3, 3));
  EXPECT_EQ(parse_element("K[3]^(-1/2)", sig), K(sig, 3, -1));
  EXPECT_EQ(parse_element("-2*q^-3", sig), Element::scalar(sig, Coefficient(-2) * Coefficient::q_power(-3)));
  EXPECT_EQ(parse_element("E[1,2]^2", sig), E(sig, 1, 2) * E(sig, 1, 2));
  EXPECT_EQ(parse_element("(q/(q^2-1))*K[1]", sig),
            Coefficient::delta().inverse() * K(sig, 1));
  EXPECT_EQ(parse_element("E[1,2]/(q-q^-1)", sig), Coefficient::delta().inverse() * E(sig, 1, 2));
  EXPECT_EQ(parse_element("  E[ 1 , 2 ]  ", sig), E(sig, 1, 2));
}

TEST(Print, Examples) {
  Signature const sig(2, 1);
  EXPECT_EQ(print_element(Element(sig)), "0");
  EXPECT_EQ(print_element(Element::identity(sig)), "1");
  EXPECT_EQ(print_element(Coefficient::delta().inverse() * (K(sig, 1) * K(sig, 2, -2))),
            "(q/(q^2-1))*K[1]*K[2]^-1");
  EXPECT_EQ(print_element(Coefficient(2) * Coefficient::q_power(-1) * E(sig, 1, 2)),
            "2*q^-1*E[1,2]");
  EXPECT_EQ(print_element(-E(sig, 1, 2) + E(sig, 2, 1)), "-E[1,2] + E[2,1]");
  EXPECT_EQ(print_element(K(sig, 3, 1)), "K[3]^(1/2)");
  EXPECT_EQ(print_element(Coefficient::delta() * K(sig, 3, 4)), "(q-q^-1)*K[3]^2");
}

TEST(RoundTrip, ParsePrintIsIdentityOnElements) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 500; ++i) {
    Signature const sig = testsupport::random_signature(rng);
    Element const x = testsupport::random_element(rng, sig);
    std::string const text = print_element(x);
    Element const back = parse_element(text, sig);
    ASSERT_EQ(back, x) << text;
    EXPECT_EQ(print_element(back), text);
  }
}

TEST(RoundTrip, PrintParseIsIdentityOnCanonicalText) {
  Signature const sig(2, 2);
  for (std::string const text :
       {"0", "1", "E[2,1]*E[1,2] + (q/(q^2-1))*K[1]*K[2]^-1", "-q*E[4,1]",
        "-3*E[1,2] + (2*q^2+1)*K[1]^(1/2)*K[4]^-3", "((q^2+1)/(q^4-2*q^2+1))*E[3,1]"}) {
    EXPECT_EQ(print_element(parse_element(text, sig)), text);
  }
}
