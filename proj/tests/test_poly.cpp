#include <gtest/gtest.h>

#include <lojex/poly.hpp>

#include <random>

using namespace lojex;

TEST(Parse, AliasesAndCanonicalForm) {
  auto p = parse_polynomial("x^2*y - 3*y^3 + 1/2");
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(p.term_count(), 3u);
  EXPECT_EQ(p.coefficient(ExponentVector({2, 1})), Rational(1));
  EXPECT_EQ(p.coefficient(ExponentVector({0, 3})), Rational(-3));
  EXPECT_EQ(parse_polynomial(p.str(), 2), p);
}

TEST(Parse, IndexedVariables) {
  auto p = parse_polynomial("x1^12 + x2^6 + x3^4");
  EXPECT_EQ(p.dimension(), 3u);
  EXPECT_EQ(p, parse_polynomial("x^12+y^6+z^4"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial("x^-1"), InputError);
  EXPECT_THROW(parse_polynomial("x^0"), InputError);
  EXPECT_THROW(parse_polynomial("x +"), InputError);
  EXPECT_THROW(parse_polynomial("x4", 3), InputError);
}

TEST(Arithmetic, ProductAndCancellation) {
  auto a = parse_polynomial("x + y");
  auto b = parse_polynomial("x - y");
  EXPECT_EQ(a * b, parse_polynomial("x^2 - y^2"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3), a * a * a);
}

// Derivative against an exact finite-difference oracle: for a polynomial of
// degree <= D in x_i, the (D+1)-point forward difference stencil with
// Lagrange weights reproduces the derivative at integer points exactly.
static Rational evaluate(const Polynomial& p, const std::vector<Rational>& pt) {
  Rational s = 0;
  for (const auto& [k, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (int e = 0; e < k[i]; ++e) t *= pt[i];
    s += t;
  }
  return s;
}

TEST(Derivative, MatchesInterpolationOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p(3);
    for (int t = 0; t < 5; ++t) {
      ExponentVector k({int(rng() % 5), int(rng() % 5), int(rng() % 5)});
      p.add_term(k, Rational(int(rng() % 11) - 5));
    }
    for (std::size_t axis = 0; axis < 3; ++axis) {
      auto d = partial_derivative(p, axis);
      std::vector<Rational> pt{Rational(2), Rational(-1), Rational(3)};
      // Derivative of the Lagrange interpolant through nodes x0 + j, j = 0..4, at x0.
      const int D = 4;
      Rational deriv = 0;
      for (int j = 0; j <= D; ++j) {
        Rational w = 0;  // l_j'(x0)
        for (int m = 0; m <= D; ++m) {
          if (m == j) continue;
          Rational prod = Rational(1) / (j - m);
          for (int l = 0; l <= D; ++l)
            if (l != j && l != m) prod *= Rational(-l) / (j - l);
          w += prod;
        }
        auto q = pt;
        q[axis] += j;
        deriv += w * evaluate(p, q);
      }
      EXPECT_EQ(evaluate(d, pt), deriv);
    }
  }
}

TEST(Weighted, Classification) {
  Weights w({1, 2, 3});
  auto f = parse_polynomial("x^12 + y^6 + z^4");
  EXPECT_TRUE(is_weighted_homogeneous(f, w));
  auto c = weighted_classification(f, w);
  EXPECT_EQ(c.degree, 12);
  EXPECT_TRUE(c.is_convenient);

  auto g = parse_polynomial("x^16 + y^8 + x*z^5");
  auto cg = weighted_classification(g, Weights({1, 2, 3}));
  EXPECT_EQ(cg.degree, 16);
  EXPECT_TRUE(cg.is_weighted_homogeneous);
  EXPECT_FALSE(cg.is_convenient);

  auto h = parse_polynomial("x^2 + y^3 + x*y^2");
  auto ph = principal_part(h, Weights({3, 2}));
  EXPECT_EQ(ph, parse_polynomial("x^2 + y^3"));
  EXPECT_THROW(weighted_classification(parse_polynomial("1 + x"), Weights({1})), InputError);
}

TEST(Substitute, LinearChange) {
  auto p = parse_polynomial("x^2 + y");
  std::vector<Polynomial> img{parse_polynomial("x + y"), parse_polynomial("y", 2)};
  EXPECT_EQ(substitute(p, img), parse_polynomial("x^2 + 2*x*y + y^2 + y"));
}
