#include <gtest/gtest.h>

#include <lojex/monomial.hpp>

#include <random>

using namespace lojex;
using geometry::Point;

// Independent 2D oracle: lower-left convex chain by monotone chain, area below it.
static Rational staircase_area(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<Point> chain;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  for (auto& p : pts) {
    if (!chain.empty() && p[1] >= chain.back()[1]) continue;
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
    chain.push_back(p);
  }
  // Region under chain: triangle fan from origin over each segment, plus axis pieces.
  Rational twice = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    twice += chain[i][0] * chain[i + 1][1] - chain[i + 1][0] * chain[i][1];
  twice = -twice;
  return twice;  // normalized: 2! * area
}

TEST(Hull, TwoDimensionalFacets) {
  auto P = NewtonPolyhedron::of(parse_monomial_ideal("x^4,y^2"));
  ASSERT_EQ(P.facets().size(), 1u);
  EXPECT_EQ(P.facets()[0].normal, (Point{1, 2}));
  EXPECT_EQ(P.facets()[0].offset, 4);
  EXPECT_EQ(*P.normalized_covolume(), 8);
}

TEST(Hull, CovolumeMatchesStaircaseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> pts{{int64_t(1 + rng() % 12), 0}, {0, int64_t(1 + rng() % 12)}};
    for (int k = 0; k < 4; ++k) pts.push_back({int64_t(rng() % 12), int64_t(rng() % 12)});
    auto P = NewtonPolyhedron::from_points(2, pts);
    EXPECT_EQ(Rational(*P.normalized_covolume()), staircase_area(pts));
  }
}

TEST(Hull, BoxAndSimplexVolumes) {
  EXPECT_EQ(*NewtonPolyhedron::of(parse_monomial_ideal("x^2,y^3,z^5")).normalized_covolume(), 30);
  EXPECT_EQ(*NewtonPolyhedron::of(MonomialIdeal::maximal_power(4, 3)).normalized_covolume(), 81);
  EXPECT_FALSE(NewtonPolyhedron::of(parse_monomial_ideal("x^2,y^3,x*z")).normalized_covolume());
}

TEST(Hull, ScalingAndMinkowski) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ExponentVector> g;
    for (std::size_t i = 0; i < 3; ++i) g.push_back(ExponentVector::unit(3, i, 1 + int(rng() % 5)));
    for (int k = 0; k < 3; ++k) g.push_back(ExponentVector({int(rng() % 4), int(rng() % 4), int(rng() % 4)}));
    MonomialIdeal I(3, g);
    auto P = NewtonPolyhedron::of(I);
    auto v = *P.normalized_covolume();
    EXPECT_EQ(*P.scaled(2).normalized_covolume(), 8 * v);
    EXPECT_EQ(minkowski_sum(P, P), P.scaled(2));
    EXPECT_EQ(NewtonPolyhedron::of(power(I, 3)), P.scaled(3));
  }
}

TEST(Hull, ClosureAndAxes) {
  auto I = parse_monomial_ideal("x^2,y^3");
  EXPECT_TRUE(closure_membership(I, ExponentVector({1, 2})));
  EXPECT_FALSE(closure_membership(I, ExponentVector({1, 1})));
  auto ax = parse_monomial_ideal("x^3,x*y").dimension() == 2
                ? NewtonPolyhedron::of(parse_monomial_ideal("x^3,x*y")).axis_intersections()
                : std::vector<ExtRational>{};
  EXPECT_EQ(ax[0], ExtRational(3));
  EXPECT_TRUE(ax[1].is_infinite());
}

TEST(Ideals, Algebra) {
  auto I = parse_monomial_ideal("x^4,y^2");
  auto m = MonomialIdeal::maximal(2);
  EXPECT_EQ(I + m, m);
  EXPECT_EQ(power(m, 2), MonomialIdeal::maximal_power(2, 2));
  EXPECT_EQ(I * m, parse_monomial_ideal("x^5,x^4*y,x*y^2,y^3"));
  EXPECT_TRUE(I.has_finite_colength());
  EXPECT_FALSE(parse_monomial_ideal("x^4,x*y").has_finite_colength());
  auto list = parse_ideal_list("x1|x2,x3^2");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].dimension(), 3u);
}

TEST(Filtration, PiecesForWeights) {
  Weights w({1, 2});
  auto p = filtration_pieces(w, 4);
  EXPECT_EQ(p.A, parse_monomial_ideal("x^4,x^2*y,y^2"));
  EXPECT_EQ(p.B, p.A);
  auto q = filtration_pieces(w, 3);
  EXPECT_EQ(q.B, parse_monomial_ideal("x^3,x*y,y^2"));
  EXPECT_EQ(q.A, parse_monomial_ideal("x^3,x*y"));
}
