#include <gtest/gtest.h>

#include <lojex/groebner.hpp>

using namespace lojex;
using namespace lojex::groebner;

static std::vector<Polynomial> polys(std::initializer_list<const char*> texts, std::size_t n) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, n));
  return out;
}

TEST(Groebner, CyclicLeadingTerms) {
  // x^2 - y, x*y - 1: lex-free check through the standard monomial count (3 roots).
  auto gb = groebner_basis(2, polys({"x^2 - y", "x*y - 1"}, 2));
  auto leads = leading_exponents(gb);
  EXPECT_EQ(standard_monomials_below(2, leads, 100), 3);
}

TEST(Groebner, LocalColengthMonomial) {
  auto r = local_colength(2, polys({"x^4", "y^2"}, 2));
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 8);
}

TEST(Groebner, LocalColengthIgnoresDistantRoots) {
  // Global degree 4 system; only the origin contributes locally with multiplicity 1.
  auto r = local_colength(2, polys({"x - x^3", "y - y^3"}, 2));
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 1);
}

TEST(Groebner, LocalColengthGenericCombination) {
  // Mixed multiplicity e(<x^2,y^2>, <x^3,y^3>) = 6.
  auto r = local_colength(2, polys({"3*x^2 - 5*y^2", "7*x^3 + 2*y^3"}, 2));
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 6);
}

TEST(Groebner, LocalColengthInfiniteHitsBound) {
  auto r = local_colength(2, polys({"x*y + 2*y^4", "x*y^2 - 3*y^5"}, 2), Integer(40));
  EXPECT_FALSE(r.value);
  EXPECT_GT(r.last_dimension, 40);
}

TEST(Groebner, ReductionCap) {
  Options opt;
  opt.max_reductions = 1;
  EXPECT_THROW(groebner_basis(3, polys({"x^2 + y*z", "y^2 + x*z", "z^2 + x*y"}, 3), opt), ResourceError);
}
