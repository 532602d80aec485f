#include <gtest/gtest.h>

#include <lojex/multiplicity.hpp>

#include <random>

using namespace lojex;

static MonomialIdeal ideal(const char* text, std::size_t n = 2) { return parse_monomial_ideal(text, n); }
static IdealTuple tuple(const char* text, std::optional<std::size_t> n = std::nullopt) {
  return IdealTuple(parse_ideal_list(text, n));
}

// Independent colength: enumerate the box below the pure powers.
static Integer brute_colength(const MonomialIdeal& I) {
  const std::size_t n = I.dimension();
  std::vector<int> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = *I.pure_power_exponent(i);
  Integer count = 0;
  ExponentVector k(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (!I.contains(k)) ++count;
      return;
    }
    for (int e = 0; e < box[i]; ++e) {
      k.set(i, e);
      rec(i + 1);
    }
    k.set(i, 0);
  };
  rec(0);
  return count;
}

static MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int max_exp, int extra) {
  std::vector<ExponentVector> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(ExponentVector::unit(n, i, 1 + int(rng() % max_exp)));
  for (int j = 0; j < extra; ++j) {
    std::vector<int> e(n);
    for (auto& v : e) v = int(rng() % (max_exp + 1));
    g.emplace_back(std::move(e));
  }
  return {n, std::move(g)};
}

TEST(Colength, Examples) {
  EXPECT_EQ(*colength(MonomialIdeal::maximal(2)), 1);
  EXPECT_EQ(*colength(MonomialIdeal::maximal_power(2, 2)), 3);
  EXPECT_EQ(*colength(ideal("x^3,y^2")), 6);
  EXPECT_FALSE(colength(ideal("x^3,x*y")));
}

TEST(Colength, MatchesBoxEnumeration) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto I = random_ideal(rng, 2 + t % 2, 6, 3);
    EXPECT_EQ(*colength(I), brute_colength(I)) << I.str();
  }
}

TEST(Covolume, Examples) {
  EXPECT_EQ(covolume(NewtonPolyhedron::of(MonomialIdeal::maximal(2))), Rational(1) / 2);
  EXPECT_EQ(covolume(NewtonPolyhedron::of(ideal("x^2,y^3"))), 3);
  auto P = NewtonPolyhedron::of(ideal("x^4,y^2") * MonomialIdeal::maximal_power(2, 4));
  EXPECT_EQ(P.vertices(), (std::vector<geometry::Point>{{0, 6}, {4, 2}, {8, 0}}));
  EXPECT_EQ(covolume(P), 20);
  EXPECT_THROW(covolume(NewtonPolyhedron::of(ideal("x^2,x*y"))), InputError);
}

TEST(Samuel, ExamplesAndOracle) {
  EXPECT_EQ(*samuel_multiplicity(MonomialIdeal::maximal(2)).value, 1);
  EXPECT_EQ(*samuel_multiplicity(ideal("x^2,y^3")).value, 6);
  EXPECT_EQ(oracle_colength_limit(MonomialIdeal::maximal(2)), 1);
  EXPECT_EQ(oracle_colength_limit(ideal("x^2,y^3")), 6);
  EXPECT_EQ(oracle_colength_limit(ideal("x^4,y^2")), 8);
  EXPECT_THROW(samuel_multiplicity(ideal("x^2,x*y")), InputError);
}

TEST(Mixed, Examples) {
  EXPECT_EQ(*mixed_multiplicity(tuple("x,y|x^2,y^3")).value, 2);
  EXPECT_EQ(*mixed_multiplicity(tuple("x^2,y^2|x^3,y^3")).value, 6);
  auto I = ideal("x^3,x*y,y^4");
  EXPECT_EQ(*mixed_multiplicity(IdealTuple::diagonal(I)).value, *samuel_multiplicity(I).value);
  EXPECT_THROW(mixed_multiplicity(tuple("x|y")), InputError);
}

TEST(Mixed, SymmetricInThreeVariables) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    std::vector<MonomialIdeal> e{random_ideal(rng, 3, 4, 2), random_ideal(rng, 3, 4, 2), random_ideal(rng, 3, 4, 2)};
    auto base = *mixed_multiplicity(IdealTuple(e)).value;
    std::swap(e[0], e[2]);
    EXPECT_EQ(*mixed_multiplicity(IdealTuple(e)).value, base);
    std::swap(e[0], e[1]);
    EXPECT_EQ(*mixed_multiplicity(IdealTuple(e)).value, base);
  }
}

TEST(Sigma, Examples) {
  auto s = sigma(tuple("x|y"));
  EXPECT_EQ(*s.value, 1);
  EXPECT_EQ(s.method, MultiplicityMethod::stabilized);

  // w = (3,1): degree-4 and degree-5 pieces generated in exact degree.
  auto inf = sigma(tuple("x*y,y^4|x*y^2,y^5"));
  EXPECT_FALSE(inf.value);
  EXPECT_EQ(inf.method, MultiplicityMethod::oracle);

  // w = (1,2): B_2 = <x^2, y>, B_4 = <x^4, x^2 y, y^2>.
  EXPECT_EQ(*sigma(tuple("x^2,y|x^4,x^2*y,y^2")).value, 4);
}

TEST(Sigma, GenericOracle) {
  OracleOptions o;
  auto r = oracle_generic_multiplicity(tuple("x^4|y^2"), o);
  EXPECT_EQ(*r.value, 8);
  EXPECT_EQ(*oracle_generic_multiplicity(tuple("x,y|x,y"), o).value, 1);
  o.upper_bound = Integer(60);
  EXPECT_TRUE(oracle_generic_multiplicity(tuple("x*y,y^4|x*y^2,y^5"), o).all_singular());
}

TEST(RNumber, Examples) {
  auto T = tuple("x^4|y^2");
  EnlargedSequence seq(T);
  EXPECT_EQ(seq.at(1), 1);
  EXPECT_EQ(seq.at(2), 4);
  EXPECT_EQ(seq.at(3), 6);
  EXPECT_EQ(seq.at(4), 8);
  EXPECT_EQ(r_number(T), 4);
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(r_number(IdealTuple::diagonal(MonomialIdeal::maximal_power(2, k))), k);
  // J = <x^2, y> for w = (1,2); B_2 = <x^2,y>, B_3 = <x^3,x*y,y^2>.
  EXPECT_EQ(r_number(tuple("x^2,y|x^3,x*y,y^2"), ideal("x^2,y")), 2);
}

// Tuples with some entries of infinite colength but finite sigma.
static IdealTuple mixed_support_tuple(std::mt19937_64& rng) {
  for (;;) {
    std::vector<MonomialIdeal> v;
    for (int i = 0; i < 2; ++i) {
      std::vector<ExponentVector> g;
      for (int j = 0; j < 2; ++j) g.push_back(ExponentVector{int(rng() % 4), int(rng() % 4)});
      v.emplace_back(2, std::move(g));
    }
    IdealTuple T(v);
    if (!T.all_finite_colength() && !v[0].is_zero() && !v[1].is_zero()) return T;
  }
}

TEST(Sigma, IndependentOfTheEnlargingIdeal) {
  std::mt19937_64 rng(21);
  int finite = 0;
  for (int i = 0; i < 25; ++i) {
    auto T = i % 2 ? IdealTuple({random_ideal(rng, 2, 4, 1), random_ideal(rng, 2, 4, 1)}) : mixed_support_tuple(rng);
    auto base = sigma(T).value;
    if (base) ++finite;
    for (const char* J : {"x^2,x*y,y^2", "x^2,y"}) EXPECT_EQ(sigma(T, {}, ideal(J)).value, base) << T.str() << " J=" << J;
  }
  EXPECT_GT(finite, 12);
}

TEST(Sigma, EnlargedSequenceIsMonotoneAndStabilizes) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 15; ++i) {
    auto T = mixed_support_tuple(rng);
    EnlargedSequence seq(T);
    auto s = sigma(T).value;
    const auto rstar = sigma_cutoff(T);
    for (std::int64_t r = 1; r < rstar + 4; ++r) EXPECT_LE(seq.at(r), seq.at(r + 1)) << T.str();
    if (s) {
      EXPECT_LE(seq.at(rstar), *s);
      EXPECT_EQ(seq.at(r_number(T)), *s);
      EXPECT_EQ(seq.at(4 * rstar), *s) << T.str();
    }
  }
}

TEST(Sigma, CoordinateObstructionImpliesSingularGenericElements) {
  // x2 divides everything in the last two entries: {x2 = 0, g1 = 0} is a curve.
  auto T = tuple("x1,x3 | x1^2*x2,x1*x2*x3,x2*x3^2,x2^4 | x2");
  auto ob = detail::coordinate_obstruction(T);
  ASSERT_TRUE(ob);
  EXPECT_EQ(ob->subspace, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(ob->meeting, 1u);
  OracleOptions o;
  o.upper_bound = Integer(40);
  EXPECT_TRUE(oracle_generic_multiplicity(T, o).all_singular());
  EXPECT_FALSE(sigma(T).value);

  EXPECT_FALSE(detail::coordinate_obstruction(tuple("x^2,y|x^4,x^2*y,y^2")));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i)
    EXPECT_FALSE(detail::coordinate_obstruction(IdealTuple({random_ideal(rng, 2, 5, 2), random_ideal(rng, 2, 5, 2)})));
}
