#include <gtest/gtest.h>

#include "degensum/lambda_poly.hpp"
#include "degensum/rational.hpp"
#include "degensum/ring.hpp"
#include "test_support.hpp"

namespace degensum {
namespace {

using testing::poly;
using testing::q;

TEST(Rational, MakeNormalizesToLowestTerms) {
  EXPECT_EQ(Rational::make(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational::make(3, -6).to_string(), "-1/2");
  const Rational zero = Rational::make(0, 7);
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.denominator(), 1);
  EXPECT_EQ(zero.to_string(), "0");
}

TEST(Rational, ZeroDenominatorIsRejected) {
  EXPECT_THROW(Rational::make(1, 0), ZeroDenominatorError);
  EXPECT_THROW(Rational::parse("3/0"), ZeroDenominatorError);
  EXPECT_THROW(Rational(1) / Rational(0), ZeroDenominatorError);
}

TEST(Rational, ParseAcceptsCanonicalAndUnnormalizedForms) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-2/3"), q(-2, 3));
  EXPECT_EQ(Rational::parse("4/-6"), q(-2, 3));
  EXPECT_EQ(Rational::parse(" 10/4 ").to_string(), "5/2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/", "/2", "1.5", "1/2/3", "--1", "1e3"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(RationalProperty, FieldAxiomsAndCanonicalForm) {
  std::mt19937_64 gen(20240101);
  for (int i = 0; i < testing::kPropertyIterations; ++i) {
    const Rational a = testing::random_rational(gen);
    const Rational b = testing::random_rational(gen);
    const Rational c = testing::random_rational(gen);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    for (const Rational& r : {a + b, a - b, a * b, -a}) {
      EXPECT_GT(r.denominator(), 0);
      EXPECT_EQ(gcd(r.numerator(), r.denominator()), 1);
      EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
  }
}

TEST(LambdaPoly, ZeroHasEmptyCanonicalForm) {
  const LambdaPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coefficients().empty());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(LambdaPoly(Rational(0)), z);
  EXPECT_EQ(poly({0, 0, 0}), z);
  EXPECT_EQ(poly({1, 2}) - poly({1, 2}), z);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(LambdaPoly, TrailingZerosAreTrimmed) {
  const LambdaPoly p = poly({3, 1, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coefficients().size(), 2u);
  EXPECT_EQ(poly({1, 1, 1}) - poly({0, 0, 1}), poly({1, 1}));
}

TEST(LambdaPoly, EvalExamples) {
  const LambdaPoly p = poly({14, -6});
  EXPECT_EQ(poly_eval(p, Rational(0)), Rational(14));
  EXPECT_EQ(poly_eval(p, Rational(1)), Rational(8));
  EXPECT_EQ(poly_eval(LambdaPoly(q(5, 3)), q(-7, 2)), q(5, 3));
}

TEST(LambdaPoly, TextForm) {
  EXPECT_EQ(poly({14, -6}).to_string(), "14 - 6*L");
  EXPECT_EQ(poly({0, 1}).to_string(), "L");
  EXPECT_EQ(poly({0, 0, -1}).to_string(), "-L^2");
  EXPECT_EQ(poly({-1, 0, 1}).to_string(), "-1 + L^2");
  EXPECT_EQ(LambdaPoly({q(1, 6), Rational(0), q(-1, 6)}).to_string(), "1/6 - 1/6*L^2");
  EXPECT_EQ(poly({0, -3, 0, 2}).to_string(), "-3*L + 2*L^3");
}

TEST(LambdaPoly, ParseAcceptsVariants) {
  EXPECT_EQ(LambdaPoly::parse("14 - 6*L"), poly({14, -6}));
  EXPECT_EQ(LambdaPoly::parse("1*L + L^2 - 1/2"), LambdaPoly({q(-1, 2), Rational(1), Rational(1)}));
  EXPECT_EQ(LambdaPoly::parse("0"), LambdaPoly());
  EXPECT_EQ(LambdaPoly::parse("L - L"), LambdaPoly());
  EXPECT_EQ(LambdaPoly::parse("-3/-2*L"), LambdaPoly({Rational(0), q(3, 2)}));
  for (const char* bad : {"", "x", "3*", "L^", "2*L^-1", "L^2.5", "1 +"}) {
    EXPECT_THROW(LambdaPoly::parse(bad), ParseError) << bad;
  }
}

TEST(LambdaPoly, JsonCoefficientForm) {
  const LambdaPoly p = LambdaPoly({q(1, 6), Rational(0), q(-1, 6)});
  EXPECT_EQ(p.coefficient_strings(), (std::vector<std::string>{"1/6", "0", "-1/6"}));
  EXPECT_EQ(LambdaPoly::from_coefficient_strings({"1/6", "0", "-1/6"}), p);
  EXPECT_TRUE(LambdaPoly().coefficient_strings().empty());
  EXPECT_EQ(LambdaPoly::from_coefficient_strings({"0", "0"}), LambdaPoly());
}

TEST(LambdaPolyProperty, EvalIsARingHomomorphism) {
  std::mt19937_64 gen(77);
  for (int i = 0; i < testing::kPropertyIterations; ++i) {
    const LambdaPoly p = testing::random_poly(gen, 12);
    const LambdaPoly r = testing::random_poly(gen, 12);
    const Rational lam = testing::small_rational(gen);
    EXPECT_EQ(poly_eval(p * r, lam), poly_eval(p, lam) * poly_eval(r, lam));
    EXPECT_EQ(poly_eval(p + r, lam), poly_eval(p, lam) + poly_eval(r, lam));
    EXPECT_EQ(poly_eval(-p, lam), -poly_eval(p, lam));
  }
}

TEST(LambdaPolyProperty, TextAndJsonFormsRoundTrip) {
  std::mt19937_64 gen(78);
  for (int i = 0; i < testing::kPropertyIterations; ++i) {
    const LambdaPoly p = testing::random_poly(gen, 8);
    EXPECT_EQ(LambdaPoly::parse(p.to_string()), p) << p.to_string();
    EXPECT_EQ(LambdaPoly::from_coefficient_strings(p.coefficient_strings()), p);
    if (!p.is_zero()) EXPECT_FALSE(p.coefficients().back().is_zero());
  }
}

TEST(RingContract, DivExactIntExamples) {
  const FixedLambda fixed{Rational(0)};
  EXPECT_EQ(fixed.div_exact_int(q(3, 2), Integer(3)), q(1, 2));
  EXPECT_EQ(fixed.div_exact_int(Rational(0), Integer(5)), Rational(0));
  EXPECT_THROW(fixed.div_exact_int(Rational(1), Integer(0)), ZeroDenominatorError);

  const SymbolicLambda sym;
  EXPECT_EQ(sym.div_exact_int(poly({14, -6}), Integer(2)), poly({7, -3}));
  EXPECT_EQ(sym.div_exact_int(LambdaPoly(), Integer(5)), LambdaPoly());
  EXPECT_THROW(sym.div_exact_int(poly({1}), Integer(0)), ZeroDenominatorError);
}

TEST(RingContract, LambdaElementAndEmbedding) {
  EXPECT_EQ(FixedLambda{q(2, 3)}.lambda_element(), q(2, 3));
  EXPECT_EQ(SymbolicLambda{}.lambda_element(), poly({0, 1}));
  EXPECT_EQ(SymbolicLambda{}.embed_int(Integer(-4)), poly({-4}));
  EXPECT_EQ(FixedLambda{Rational(0)}.describe(), "0");
  EXPECT_EQ(SymbolicLambda{}.describe(), "symbolic");
}

TEST(RingContractProperty, DivExactUndoesIntegerScaling) {
  std::mt19937_64 gen(79);
  const SymbolicLambda sym;
  const FixedLambda fixed{q(-2, 3)};
  for (int i = 0; i < testing::kPropertyIterations; ++i) {
    Integer m(static_cast<long>(gen() % 41) - 20);
    if (m == 0) m = 7;
    const LambdaPoly p = testing::random_poly(gen, 10);
    EXPECT_EQ(sym.div_exact_int(sym.embed_int(m) * p, m), p);
    const Rational r = testing::random_rational(gen);
    EXPECT_EQ(fixed.div_exact_int(fixed.embed_int(m) * r, m), r);
    // poly_eval commutes with div_exact_int
    const Rational lam = testing::small_rational(gen);
    EXPECT_EQ(poly_eval(sym.div_exact_int(p, m), lam), FixedLambda{lam}.div_exact_int(poly_eval(p, lam), m));
  }
}

TEST(RingContractProperty, CommutativeRingAxiomsSymbolic) {
  std::mt19937_64 gen(80);
  for (int i = 0; i < 100; ++i) {
    const LambdaPoly a = testing::random_poly(gen, 6);
    const LambdaPoly b = testing::random_poly(gen, 6);
    const LambdaPoly c = testing::random_poly(gen, 6);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LambdaPoly());
  }
}

}  // namespace
}  // namespace degensum
