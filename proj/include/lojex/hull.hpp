#pragma once

// Exact convex hulls of orthant-closed point sets, P = conv(points) + R^n_+.
//
// Facets come from a double-description pass over the cone of valid
// inequalities {(a, c) : a >= 0, <a, p> >= c for every point p}. Its extreme
// rays are exactly the facets of P plus the trivial ray (0, -1). Covolumes
// are computed by a pulling triangulation of the bounded facets, coned to the
// origin, so all volumes stay integral (normalized by n!).

#include <lojex/numeric.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace lojex::geometry {

using Point = std::vector<std::int64_t>;

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::optional<std::size_t> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

// <normal, x> >= offset
struct HalfSpace {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct OrthantHull {
  std::size_t dim = 0;
  std::vector<Point> vertices;       // lexicographically sorted
  std::vector<HalfSpace> supports;   // every facet, including coordinate ones (offset 0)
  std::vector<Bitset> incidence;     // incidence[f]: vertices on supports[f]

  bool empty() const { return vertices.empty(); }

  // Facets with positive offset; these are the bounded ones when P meets every axis.
  std::vector<HalfSpace> facets() const {
    std::vector<HalfSpace> out;
    for (const auto& h : supports)
      if (h.offset > 0) out.push_back(h);
    return out;
  }
};

namespace detail {

inline std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw ResourceError("hull coordinates exceed 64-bit range");
  return static_cast<std::int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Ray {
  std::vector<std::int64_t> v;  // (a_1, ..., a_n, c)
  Bitset zero;                  // constraints tight at this ray
};

}  // namespace detail

// Drops duplicates and points dominated componentwise by another point.
inline std::vector<Point> minimal_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    auto sa = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto sb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    return sa != sb ? sa < sb : a < b;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> keep;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : keep) {
      bool le = true;
      for (std::size_t i = 0; i < p.size() && le; ++i) le = q[i] <= p[i];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(p);
  }
  return keep;
}

inline OrthantHull orthant_hull(std::size_t n, std::vector<Point> input) {
  OrthantHull hull;
  hull.dim = n;
  if (input.empty()) return hull;
  for (const auto& p : input) {
    if (p.size() != n) throw InputError("hull point has wrong dimension");
    for (auto x : p)
      if (x < 0) throw InputError("hull point has a negative coordinate");
  }
  std::vector<Point> pts = minimal_points(std::move(input));
  const std::size_t m = n + pts.size();  // constraints: n axis, then one per point
  const std::size_t d = n + 1;

  auto eval = [&](const std::vector<std::int64_t>& v, std::size_t j) -> __int128 {
    if (j < n) return v[j];
    const Point& p = pts[j - n];
    __int128 s = -static_cast<__int128>(v[n]);
    for (std::size_t i = 0; i < n; ++i) s += static_cast<__int128>(v[i]) * p[i];
    return s;
  };

  std::vector<detail::Ray> rays;
  for (std::size_t i = 0; i < n; ++i) {
    detail::Ray r{std::vector<std::int64_t>(d, 0), Bitset(m)};
    r.v[i] = 1;
    r.v[n] = pts[0][i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r.zero.set(j);
    r.zero.set(n);
    rays.push_back(std::move(r));
  }
  {
    detail::Ray far{std::vector<std::int64_t>(d, 0), Bitset(m)};
    far.v[n] = -1;
    for (std::size_t j = 0; j < n; ++j) far.zero.set(j);
    rays.push_back(std::move(far));
  }

  for (std::size_t k = 1; k < pts.size(); ++k) {
    const std::size_t j = n + k;
    std::vector<__int128> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = eval(rays[r].v, j);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zero.set(j);
      continue;
    }
    std::vector<detail::Ray> next;
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<__int128> w(d);
        __int128 g = 0;
        for (std::size_t i = 0; i < d; ++i) {
          __int128 a = 0, b = 0;
          if (__builtin_mul_overflow(val[p], static_cast<__int128>(rays[q].v[i]), &a) ||
              __builtin_mul_overflow(val[q], static_cast<__int128>(rays[p].v[i]), &b))
            throw ResourceError("hull arithmetic overflow");
          w[i] = a - b;
          g = detail::gcd128(g, w[i]);
        }
        detail::Ray nr{std::vector<std::int64_t>(d), common};
        for (std::size_t i = 0; i < d; ++i) nr.v[i] = detail::narrow(g ? w[i] / g : w[i]);
        nr.zero.set(j);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      if (val[r] == 0) rays[r].zero.set(j);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  // Supporting hyperplanes with their point incidences.
  std::vector<HalfSpace> supports;
  std::vector<Bitset> point_masks;
  for (const auto& r : rays) {
    bool trivial = std::all_of(r.v.begin(), r.v.begin() + static_cast<std::ptrdiff_t>(n),
                               [](auto x) { return x == 0; });
    if (trivial) continue;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) g = std::gcd(g, r.v[i]);
    HalfSpace h;
    h.normal.resize(n);
    for (std::size_t i = 0; i < n; ++i) h.normal[i] = r.v[i] / g;
    h.offset = r.v[n] / g;
    Bitset mask(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (r.zero.test(n + k)) mask.set(k);
    supports.push_back(std::move(h));
    point_masks.push_back(std::move(mask));
  }

  // A point is a vertex iff the supports through it meet in that point alone.
  std::vector<std::size_t> vertex_ids;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Bitset meet(pts.size());
    bool any = false;
    for (const auto& mask : point_masks) {
      if (!mask.test(k)) continue;
      meet = any ? (meet & mask) : mask;
      any = true;
    }
    if (any && meet.count() == 1) vertex_ids.push_back(k);
  }
  std::sort(vertex_ids.begin(), vertex_ids.end(),
            [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  for (auto k : vertex_ids) hull.vertices.push_back(pts[k]);

  std::vector<std::size_t> order(supports.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return supports[a] < supports[b]; });
  for (auto f : order) {
    Bitset vm(vertex_ids.size());
    for (std::size_t v = 0; v < vertex_ids.size(); ++v)
      if (point_masks[f].test(vertex_ids[v])) vm.set(v);
    hull.supports.push_back(supports[f]);
    hull.incidence.push_back(std::move(vm));
  }
  return hull;
}

// True iff P contains a point of every coordinate axis.
inline bool meets_every_axis(const OrthantHull& hull) {
  if (hull.empty()) return false;
  for (std::size_t i = 0; i < hull.dim; ++i) {
    bool hit = std::any_of(hull.vertices.begin(), hull.vertices.end(), [&](const Point& v) {
      for (std::size_t j = 0; j < hull.dim; ++j)
        if (j != i && v[j] != 0) return false;
      return true;
    });
    if (!hit) return false;
  }
  return true;
}

inline Integer determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// n! times the volume of R^n_+ \ P; nullopt when P misses some axis.
inline std::optional<Integer> normalized_covolume(const OrthantHull& hull) {
  if (!meets_every_axis(hull)) return std::nullopt;
  const std::size_t n = hull.dim;
  using Simplices = std::vector<std::vector<std::size_t>>;
  std::unordered_map<Bitset, Simplices, BitsetHash> memo;

  std::function<Simplices(const Bitset&, std::size_t)> triangulate =
      [&](const Bitset& face, std::size_t k) -> Simplices {
    if (auto it = memo.find(face); it != memo.end()) return it->second;
    Simplices out;
    if (k == 0) {
      out.push_back({*face.first()});
      memo.emplace(face, out);
      return out;
    }
    std::size_t apex = *face.first();
    std::vector<Bitset> subfaces;
    for (const auto& mask : hull.incidence) {
      Bitset g = face & mask;
      if (g.none() || g == face) continue;
      subfaces.push_back(std::move(g));
    }
    std::vector<Bitset> maximal;
    for (std::size_t a = 0; a < subfaces.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < subfaces.size() && !dominated; ++b) {
        if (a == b) continue;
        if (subfaces[a].subset_of(subfaces[b]) && !(subfaces[a] == subfaces[b])) dominated = true;
        if (subfaces[a] == subfaces[b] && b < a) dominated = true;
      }
      if (!dominated) maximal.push_back(subfaces[a]);
    }
    for (const auto& g : maximal) {
      if (g.test(apex)) continue;
      for (auto s : triangulate(g, k - 1)) {
        s.push_back(apex);
        out.push_back(std::move(s));
      }
    }
    memo.emplace(face, out);
    return out;
  };

  Integer total = 0;
  for (std::size_t f = 0; f < hull.supports.size(); ++f) {
    if (hull.supports[f].offset <= 0) continue;
    for (const auto& simplex : triangulate(hull.incidence[f], n - 1)) {
      std::vector<std::vector<Integer>> mat(n, std::vector<Integer>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) mat[r][c] = hull.vertices[simplex[r]][c];
      Integer det = determinant(std::move(mat));
      total += det < 0 ? Integer(-det) : det;
    }
  }
  return total;
}

}  // namespace lojex::geometry
