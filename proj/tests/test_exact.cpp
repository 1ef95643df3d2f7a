#include <gtest/gtest.h>

#include "jordanet/error.hpp"
#include "jordanet/mpoly.hpp"
#include "jordanet/random.hpp"
#include "jordanet/rational.hpp"
#include "jordanet/unipoly.hpp"

namespace jordanet {
namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

UniPoly U(const char* s, const char* var = "lambda") { return UniPoly::from_mpoly(P(s), var); }

MPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int terms, int max_exp) {
  MPoly p;
  for (int k = 0; k < terms; ++k) {
    MPoly t(Rational(rng.uniform(-5, 5)));
    for (const auto& v : vars) t *= MPoly::variable(v).pow(static_cast<unsigned>(rng.uniform(0, max_exp)));
    p += t;
  }
  return p;
}

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Rational, PrimitiveIntegerVector) {
  const auto v = primitive_integer_vector({Rational(0), Rational(-1, 2), Rational(3, 4)});
  EXPECT_EQ(v, (std::vector<Rational>{0, 2, -3}));
}

TEST(MPoly, DifferenceOfSquares) { EXPECT_EQ(P("x+y") * P("x-y"), P("x^2-y^2")); }

TEST(MPoly, AdditiveIdentity) {
  const MPoly p = P("3*x^2*y-1/2*z");
  EXPECT_EQ(p + MPoly(), p);
}

TEST(MPoly, SquareOfConicDeterminant) {
  const MPoly q = P("x*z-y^2");
  const MPoly sq = q * q;
  EXPECT_EQ(sq.to_string(), "x^2*z^2-2*x*y^2*z+y^4");
  EXPECT_EQ(sq.term_count(), 3u);
  EXPECT_EQ(sq.total_degree(), 4);
}

TEST(MPoly, ZeroPolynomialStats) {
  const MPoly z;
  EXPECT_EQ(z.total_degree(), MPoly::kDegreeOfZero);
  EXPECT_EQ(z.term_count(), 0u);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(MPoly, Evaluation) {
  const MPoly p = P("x^2+y");
  EXPECT_EQ(p.evaluate({{"x", 2}, {"y", 3}}), Rational(7));
  EXPECT_EQ(p.substitute({{"x", P("t")}}), P("t^2+y"));
  EXPECT_EQ(P("x*z-y^2").evaluate({{"x", 1}, {"z", 1}, {"y", 0}}), Rational(1));
}

TEST(MPoly, CoefficientLookup) {
  const MPoly p = P("x^2*z^2-2*x*y^2*z+y^4");
  EXPECT_EQ(p.coefficient({{"x", 1}, {"y", 2}, {"z", 1}}), Rational(-2));
  EXPECT_EQ(p.coefficient({{"w", 1}}), Rational(0));
}

TEST(MPoly, NaturalVariableOrder) {
  const MPoly p = P("t10+t2+t1");
  EXPECT_EQ(p.variables(), (VarList{"t1", "t2", "t10"}));
  EXPECT_EQ(p.to_string(), "t1+t2+t10");
}

TEST(MPoly, TextRoundTrip) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    MPoly p = random_poly(rng, {"x", "y", "z12"}, 6, 3) * make_rational(rng.uniform(1, 9), rng.uniform(1, 9));
    EXPECT_EQ(MPoly::parse(p.to_string()), p);
    EXPECT_EQ(MPoly::parse(p.to_string()).to_string(), p.to_string());
  }
}

TEST(MPoly, ParseErrors) {
  EXPECT_THROW(MPoly::parse("x+"), Error);
  EXPECT_THROW(MPoly::parse("2*(x"), Error);
  EXPECT_THROW(MPoly::parse("x$y"), Error);
  EXPECT_THROW(MPoly::parse("1/0"), Error);
}

TEST(MPoly, RingAxiomsRandomized) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const MPoly p = random_poly(rng, {"a", "b", "c"}, 5, 3);
    const MPoly q = random_poly(rng, {"b", "d"}, 4, 3);
    const MPoly r = random_poly(rng, {"a", "d"}, 4, 2);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(MPoly, EvaluationIsHomomorphic) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const MPoly p = random_poly(rng, {"a", "b", "c"}, 5, 3);
    const MPoly q = random_poly(rng, {"a", "c"}, 5, 3);
    const std::map<std::string, Rational> at = {
        {"a", rng.uniform(-4, 4)}, {"b", make_rational(rng.uniform(-4, 4), 3)}, {"c", rng.uniform(-4, 4)}};
    EXPECT_EQ((p * q).evaluate(at), p.evaluate(at) * q.evaluate(at));
    EXPECT_EQ((p + q).evaluate(at), p.evaluate(at) + q.evaluate(at));
  }
}

TEST(MPoly, ExactDivision) {
  const MPoly a = P("x^2*z^2-2*x*y^2*z+y^4");
  EXPECT_EQ(*divide_exact(a, P("x*z-y^2")), P("x*z-y^2"));
  EXPECT_FALSE(divide_exact(P("x^2+1"), P("x-1")).has_value());
}

TEST(MPoly, MultivariateGcd) {
  EXPECT_EQ(gcd(P("(x+y)^2*(x-z)"), P("(x+y)*(x-z)^3*y")), P("(x+y)*(x-z)"));
  EXPECT_EQ(gcd(P("6*x^2"), P("4*x*y")), P("x"));
  EXPECT_EQ(gcd(P("x^2+1"), P("x+2")), MPoly(1));
}

TEST(Subresultant, SpecExamples) {
  EXPECT_EQ(subresultant_gcd(U("lambda^2-t^2"), U("lambda-t")), U("lambda-t"));
  EXPECT_EQ(subresultant_gcd(U("lambda^2+1"), U("lambda^2+1")), U("lambda^2+1"));
  EXPECT_EQ(subresultant_gcd(U("lambda^3-lambda"), U("lambda^2-1")), U("lambda^2-1"));
}

TEST(Subresultant, GcdDividesBothInputs) {
  Rng rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const MPoly common = random_poly(rng, {"lambda", "s"}, 3, 2);
    if (common.is_zero()) continue;
    const MPoly p = common * random_poly(rng, {"lambda", "s"}, 3, 2);
    const MPoly q = common * random_poly(rng, {"lambda", "s"}, 3, 2);
    if (p.is_zero() || q.is_zero()) continue;
    const UniPoly up = UniPoly::from_mpoly(p, "lambda");
    const UniPoly uq = UniPoly::from_mpoly(q, "lambda");
    const UniPoly g = subresultant_gcd(up, uq);
    EXPECT_TRUE(pseudo_remainder(up, g).is_zero()) << p << " / " << g.to_string();
    EXPECT_TRUE(pseudo_remainder(uq, g).is_zero()) << q << " / " << g.to_string();
    const UniPoly uc = UniPoly::from_mpoly(common, "lambda");
    if (uc.degree() > 0) EXPECT_TRUE(pseudo_remainder(g, primitive_part(uc)).is_zero());
  }
}

TEST(Squarefree, SpecExamples) {
  const auto d = squarefree_decomposition(U("(lambda-t)^2*(lambda+1)"));
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].factor, U("lambda+1"));
  EXPECT_EQ(d.factors[0].multiplicity, 1u);
  EXPECT_EQ(d.factors[1].factor, U("lambda-t"));
  EXPECT_EQ(d.factors[1].multiplicity, 2u);

  const auto e = squarefree_decomposition(U("lambda^2-1"));
  ASSERT_EQ(e.factors.size(), 1u);
  EXPECT_EQ(e.factors[0].factor, U("lambda^2-1"));
  EXPECT_EQ(e.factors[0].multiplicity, 1u);
}

TEST(Squarefree, ReconstructsInput) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly a = P("lambda") - random_poly(rng, {"s", "u"}, 2, 1);
    const MPoly b = P("lambda^2") + random_poly(rng, {"s"}, 2, 2);
    const MPoly p = MPoly(Rational(rng.uniform(1, 5))) * P("s+2") * a.pow(3) * b.pow(static_cast<unsigned>(rng.uniform(1, 2)));
    const UniPoly up = UniPoly::from_mpoly(p, "lambda");
    const auto d = squarefree_decomposition(up);
    UniPoly prod("lambda", {d.content});
    for (const auto& f : d.factors) {
      for (unsigned k = 0; k < f.multiplicity; ++k) prod = prod * f.factor;
      // Squarefree: coprime to its own derivative.
      EXPECT_EQ(subresultant_gcd(f.factor, f.factor.derivative()).degree(), 0);
    }
    EXPECT_EQ(prod.to_mpoly(), p);
  }
}

}  // namespace
}  // namespace jordanet
