#pragma once

// Monomial ideals, their Newton polyhedra, and the weighted filtration pieces.

#include <lojex/hull.hpp>
#include <lojex/poly.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lojex {

// Minimal monomial generators, kept as an antichain in canonical order
// (ascending total degree, then x1-heavy first). No generators = zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() : MonomialIdeal(1) {}
  explicit MonomialIdeal(std::size_t n) : n_(n), finite_colength_(false) {
    if (n == 0) throw InputError("ideal dimension must be >= 1");
  }
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators) : MonomialIdeal(n) {
    for (const auto& g : generators)
      if (g.size() != n) throw InputError("generator dimension does not match ideal dimension");
    gens_ = minimalize(std::move(generators));
    finite_colength_ = compute_finite_colength();
  }

  static MonomialIdeal maximal(std::size_t n) {
    std::vector<ExponentVector> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(ExponentVector::unit(n, i));
    return {n, std::move(g)};
  }
  static MonomialIdeal maximal_power(std::size_t n, int r);
  static MonomialIdeal unit(std::size_t n) { return {n, {ExponentVector(n)}}; }
  // Ideal generated by the monomials in supp(p).
  static MonomialIdeal from_support(const Polynomial& p) { return {p.dimension(), p.support()}; }

  std::size_t dimension() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool has_finite_colength() const { return finite_colength_; }

  bool contains(const ExponentVector& k) const {
    if (k.size() != n_) throw InputError("monomial dimension does not match ideal dimension");
    return std::any_of(gens_.begin(), gens_.end(), [&](const auto& g) { return g.divides(k); });
  }

  // Smallest e with x_axis^e in the ideal.
  std::optional<int> pure_power_exponent(std::size_t axis) const {
    std::optional<int> best;
    for (const auto& g : gens_) {
      if (g.is_zero()) return 0;
      auto a = g.pure_axis();
      if (a && *a == axis && (!best || g[axis] < *best)) best = g[axis];
    }
    return best;
  }

  std::string str() const {
    if (gens_.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += monomial_string(gens_[i]);
    }
    return s + ">";
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

  static std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> keep;
    for (auto& g : gens) {
      bool redundant = std::any_of(keep.begin(), keep.end(), [&](const auto& k) { return k.divides(g); });
      if (!redundant) keep.push_back(std::move(g));
    }
    return keep;
  }

  static bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.entries() > b.entries();
  }

 private:
  bool compute_finite_colength() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!pure_power_exponent(i)) return false;
    return true;
  }

  std::size_t n_;
  std::vector<ExponentVector> gens_;
  bool finite_colength_;
};

inline MonomialIdeal MonomialIdeal::maximal_power(std::size_t n, int r) {
  if (r < 1) throw InputError("power of the maximal ideal must be >= 1");
  std::vector<ExponentVector> gens;
  ExponentVector k(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      k.set(i, left);
      gens.push_back(k);
      return;
    }
    for (int e = left; e >= 0; --e) {
      k.set(i, e);
      rec(i + 1, left - e);
    }
  };
  rec(0, r);
  return {n, std::move(gens)};
}

inline MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension()) throw InputError("ideal sum: dimension mismatch");
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return {a.dimension(), std::move(g)};
}

inline MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dimension() != b.dimension()) throw InputError("ideal product: dimension mismatch");
  std::vector<ExponentVector> g;
  g.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x + y);
  return {a.dimension(), std::move(g)};
}

inline MonomialIdeal power(const MonomialIdeal& a, int s) {
  if (s < 1) throw InputError("ideal power must be >= 1");
  MonomialIdeal result = a;
  for (int i = 1; i < s; ++i) result = result * a;
  return result;
}

// ---------------------------------------------------------------------------

// Gamma_+ = conv(points) + R^n_+, with both representations. The empty
// polyhedron (Newton polyhedron of 0) is an ordinary value.
class NewtonPolyhedron {
 public:
  using Point = geometry::Point;
  using HalfSpace = geometry::HalfSpace;

  NewtonPolyhedron() = default;
  explicit NewtonPolyhedron(std::size_t n) { hull_.dim = n; }

  static NewtonPolyhedron from_points(std::size_t n, std::vector<Point> pts) {
    NewtonPolyhedron p;
    p.hull_ = geometry::orthant_hull(n, std::move(pts));
    return p;
  }
  static NewtonPolyhedron of(const MonomialIdeal& I) {
    return from_points(I.dimension(), to_points(I.generators()));
  }
  static NewtonPolyhedron of(const Polynomial& f) {
    return from_points(f.dimension(), to_points(f.support()));
  }

  std::size_t dimension() const { return hull_.dim; }
  bool empty() const { return hull_.empty(); }
  const std::vector<Point>& vertices() const { return hull_.vertices; }
  const std::vector<HalfSpace>& supports() const { return hull_.supports; }
  std::vector<HalfSpace> facets() const { return hull_.facets(); }
  const geometry::OrthantHull& hull() const { return hull_; }

  std::vector<ExponentVector> vertex_exponents() const {
    std::vector<ExponentVector> out;
    for (const auto& v : hull_.vertices) {
      std::vector<int> e(v.begin(), v.end());
      out.emplace_back(std::move(e));
    }
    return out;
  }

  bool contains(const Point& k) const {
    if (empty()) return false;
    if (k.size() != dimension()) throw InputError("point dimension does not match polyhedron");
    for (const auto& h : hull_.supports) {
      __int128 s = 0;
      for (std::size_t i = 0; i < k.size(); ++i) s += static_cast<__int128>(h.normal[i]) * k[i];
      if (s < h.offset) return false;
    }
    return true;
  }
  bool contains(const ExponentVector& k) const {
    return contains(Point(k.entries().begin(), k.entries().end()));
  }

  bool meets_every_axis() const { return geometry::meets_every_axis(hull_); }

  // r_i = min{ t >= 0 : t e_i in Gamma_+ }, or +infinity.
  std::vector<ExtRational> axis_intersections() const {
    if (empty()) throw InputError("axis intersections of the empty polyhedron");
    std::vector<ExtRational> out;
    for (std::size_t i = 0; i < dimension(); ++i) {
      Rational t = 0;
      bool infinite = false;
      for (const auto& h : hull_.supports) {
        if (h.offset <= 0) continue;
        if (h.normal[i] == 0) {
          infinite = true;
          break;
        }
        Rational q = ratio(h.offset, h.normal[i]);
        if (q > t) t = q;
      }
      out.push_back(infinite ? ExtRational::infinity() : ExtRational(t));
    }
    return out;
  }

  NewtonPolyhedron scaled(std::int64_t s) const {
    if (s < 1) throw InputError("polyhedron scale factor must be >= 1");
    auto pts = hull_.vertices;
    for (auto& p : pts)
      for (auto& x : p)
        if (__builtin_mul_overflow(x, s, &x)) throw ResourceError("polyhedron scaling overflows");
    return from_points(dimension(), std::move(pts));
  }

  // n! * covolume, nullopt when some axis is missed.
  std::optional<Integer> normalized_covolume() const { return geometry::normalized_covolume(hull_); }

  std::optional<Rational> covolume() const {
    auto v = normalized_covolume();
    if (!v) return std::nullopt;
    return ratio(*v, factorial(static_cast<unsigned>(dimension())));
  }

  friend bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
    return a.dimension() == b.dimension() && a.vertices() == b.vertices();
  }

  static std::vector<Point> to_points(const std::vector<ExponentVector>& ks) {
    std::vector<Point> pts;
    pts.reserve(ks.size());
    for (const auto& k : ks) pts.emplace_back(k.entries().begin(), k.entries().end());
    return pts;
  }

 private:
  geometry::OrthantHull hull_;
};

// Newton polyhedron of I + J.
inline NewtonPolyhedron hull_union(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
  if (a.dimension() != b.dimension()) throw InputError("polyhedra of different dimension");
  auto pts = a.vertices();
  pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
  return NewtonPolyhedron::from_points(a.dimension(), std::move(pts));
}

// Newton polyhedron of I * J.
inline NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
  if (a.dimension() != b.dimension()) throw InputError("polyhedra of different dimension");
  if (a.empty() || b.empty()) return NewtonPolyhedron(a.dimension());
  std::vector<geometry::Point> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) {
      geometry::Point p(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) p[i] = x[i] + y[i];
      pts.push_back(std::move(p));
    }
  return NewtonPolyhedron::from_points(a.dimension(), std::move(pts));
}

inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) { return NewtonPolyhedron::of(I); }
inline NewtonPolyhedron newton_polyhedron(const Polynomial& f) { return NewtonPolyhedron::of(f); }

// x^k lies in the integral closure of I.
inline bool closure_membership(const MonomialIdeal& I, const ExponentVector& k) {
  if (k.size() != I.dimension()) throw InputError("closure membership: dimension mismatch");
  if (I.is_zero()) throw InputError("closure membership in the zero ideal");
  return NewtonPolyhedron::of(I).contains(k);
}

inline std::vector<ExtRational> axis_intersections(const NewtonPolyhedron& P) {
  return P.axis_intersections();
}

// Integrally closed monomial ideal of all lattice points of Gamma_+.
inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  const auto P = NewtonPolyhedron::of(I);
  const std::size_t n = I.dimension();
  // Every minimal lattice point of Gamma_+ is bounded by the generators' max coordinates.
  std::vector<int> box(n, 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
  std::vector<ExponentVector> gens;
  ExponentVector k(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (P.contains(k)) gens.push_back(k);
      return;
    }
    for (int e = 0; e <= box[i]; ++e) {
      k.set(i, e);
      rec(i + 1);
    }
  };
  rec(0);
  return {n, std::move(gens)};
}

// ---------------------------------------------------------------------------
// Weighted homogeneous filtration.

struct FiltrationPieces {
  MonomialIdeal A;  // generated by monomials of w-degree exactly r
  MonomialIdeal B;  // all h with d_w(h) >= r
};

inline FiltrationPieces filtration_pieces(const Weights& w, std::int64_t r) {
  if (r < 1) throw InputError("filtration index must be >= 1");
  const std::size_t n = w.size();
  std::vector<ExponentVector> exact, lower;
  ExponentVector k(n);
  // Minimal generators of B_r have k_i <= ceil(r / w_i).
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t deg) {
    if (i == n) {
      if (deg == r) exact.push_back(k);
      if (deg < r) return;
      for (std::size_t j = 0; j < n; ++j)
        if (k[j] > 0 && deg - w[j] >= r) return;
      lower.push_back(k);
      return;
    }
    std::int64_t cap = (r + w[i] - 1) / w[i];
    for (std::int64_t e = 0; e <= cap; ++e) {
      k.set(i, static_cast<int>(e));
      rec(i + 1, deg + e * w[i]);
    }
    k.set(i, 0);
  };
  rec(0, 0);
  return {MonomialIdeal(n, std::move(exact)), MonomialIdeal(n, std::move(lower))};
}

// d_w(I) = min over generators; nullopt for the zero ideal.
inline WeightedDegree weighted_degree(const MonomialIdeal& I, const Weights& w) {
  if (I.dimension() != w.size()) throw InputError("weights and ideal dimension differ");
  WeightedDegree best;
  for (const auto& g : I.generators()) {
    auto d = w.dot(g);
    if (!best || d < *best) best = d;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Text forms: generators separated by ',', ideals by '|'.

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? p : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

inline std::size_t inferred_dimension(const std::vector<std::string_view>& parts) {
  std::size_t n = 1;
  for (auto part : parts) n = std::max(n, parse_polynomial(part).dimension());
  return n;
}

inline MonomialIdeal ideal_from_parts(const std::vector<std::string_view>& parts, std::size_t n) {
  std::vector<ExponentVector> gens;
  for (auto part : parts) {
    auto p = parse_polynomial(part, n);
    if (p.is_zero()) continue;
    if (p.term_count() != 1) throw InputError("ideal generator is not a monomial: '" + std::string(part) + "'");
    gens.push_back(p.terms().begin()->first);
  }
  return {n, std::move(gens)};
}

}  // namespace detail

inline MonomialIdeal parse_monomial_ideal(std::string_view text,
                                          std::optional<std::size_t> dimension = std::nullopt) {
  auto parts = detail::split(text, ',');
  std::size_t n = dimension.value_or(detail::inferred_dimension(parts));
  return detail::ideal_from_parts(parts, n);
}

inline std::vector<MonomialIdeal> parse_ideal_list(std::string_view text,
                                                   std::optional<std::size_t> dimension = std::nullopt) {
  auto ideals = detail::split(text, '|');
  std::size_t n = 1;
  if (dimension) {
    n = *dimension;
  } else {
    for (auto part : ideals) n = std::max(n, detail::inferred_dimension(detail::split(part, ',')));
  }
  std::vector<MonomialIdeal> out;
  for (auto part : ideals) out.push_back(detail::ideal_from_parts(detail::split(part, ','), n));
  return out;
}

}  // namespace lojex
