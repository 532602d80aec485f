#pragma once

// Colength, Samuel and mixed multiplicities, Rees' mixed multiplicity sigma
// and r-numbers of monomial ideals, with brute-force oracles.

#include <lojex/groebner.hpp>
#include <lojex/monomial.hpp>
#include <lojex/parallel.hpp>

#include <bit>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lojex {

// n monomial ideals in n variables.
class IdealTuple {
 public:
  IdealTuple() = default;
  explicit IdealTuple(std::vector<MonomialIdeal> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw InputError("empty ideal tuple");
    for (const auto& I : entries_)
      if (I.dimension() != entries_.size())
        throw InputError("ideal tuple needs exactly n ideals in n variables (got " +
                         std::to_string(entries_.size()) + " ideals in dimension " +
                         std::to_string(I.dimension()) + ")");
  }
  static IdealTuple diagonal(const MonomialIdeal& I) {
    return IdealTuple(std::vector<MonomialIdeal>(I.dimension(), I));
  }

  std::size_t dimension() const { return entries_.size(); }
  const MonomialIdeal& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<MonomialIdeal>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool all_finite_colength() const {
    for (const auto& I : entries_)
      if (!I.has_finite_colength()) return false;
    return true;
  }

  MonomialIdeal sum() const {
    MonomialIdeal s = entries_.front();
    for (std::size_t i = 1; i < entries_.size(); ++i) s = s + entries_[i];
    return s;
  }

  IdealTuple power(int s) const {
    std::vector<MonomialIdeal> out;
    for (const auto& I : entries_) out.push_back(lojex::power(I, s));
    return IdealTuple(std::move(out));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? ", " : "") + entries_[i].str();
    return s + ")";
  }

 private:
  std::vector<MonomialIdeal> entries_;
};

// nullopt is +infinity.
using Count = std::optional<Integer>;

enum class MultiplicityMethod { covolume, polarization, stabilized, oracle };

inline const char* to_string(MultiplicityMethod m) {
  switch (m) {
    case MultiplicityMethod::covolume: return "covolume";
    case MultiplicityMethod::polarization: return "polarization";
    case MultiplicityMethod::stabilized: return "stabilized";
    case MultiplicityMethod::oracle: return "oracle";
  }
  return "?";
}

struct MultiplicityValue {
  Count value;
  MultiplicityMethod method = MultiplicityMethod::covolume;
  std::vector<std::string> evidence;

  bool is_finite() const { return value.has_value(); }
  std::string str() const { return value ? value->str() : "infinity"; }
};

// ---------------------------------------------------------------------------

// Standard monomials: for every prefix (k1..k_{n-1}) below the pure powers,
// the column above it has length min{g_n : g dominated on the prefix}.
inline Count colength(const MonomialIdeal& I) {
  if (!I.has_finite_colength()) return std::nullopt;
  const std::size_t n = I.dimension();
  std::vector<int> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = *I.pure_power_exponent(i);
  if (n == 1) return Integer(box[0]);

  Integer total = 0;
  std::vector<int> k(n - 1, 0);
  std::function<void(std::size_t, std::vector<const ExponentVector*>)> rec =
      [&](std::size_t i, std::vector<const ExponentVector*> alive) {
        if (i == n - 1) {
          int col = box[n - 1];
          for (auto* g : alive) col = std::min(col, (*g)[n - 1]);
          total += col;
          return;
        }
        for (int e = 0; e < box[i]; ++e) {
          k[i] = e;
          std::vector<const ExponentVector*> next;
          for (auto* g : alive)
            if ((*g)[i] <= e) next.push_back(g);
          rec(i + 1, std::move(next));
        }
      };
  std::vector<const ExponentVector*> all;
  for (const auto& g : I.generators()) all.push_back(&g);
  rec(0, all);
  return total;
}

inline Rational covolume(const NewtonPolyhedron& P) {
  if (P.empty()) throw InputError("covolume of the empty polyhedron");
  auto v = P.covolume();
  if (!v) throw InputError("covolume is infinite: the polyhedron misses a coordinate axis");
  return *v;
}

namespace detail {

// n! covol(P), assuming P meets every axis.
inline Integer normalized_volume(const NewtonPolyhedron& P) {
  auto v = P.normalized_covolume();
  if (!v) throw InputError("polyhedron misses a coordinate axis");
  return *v;
}

// Mixed multiplicity of n polyhedra meeting every axis, by polarization.
inline Integer mixed_volume(const std::vector<NewtonPolyhedron>& P) {
  const std::size_t n = P.size();
  std::vector<NewtonPolyhedron> sums(std::size_t{1} << n);
  Integer acc = 0;
  for (std::size_t S = 1; S < sums.size(); ++S) {
    std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(S));
    std::size_t rest = S & ~(std::size_t{1} << top);
    sums[S] = rest ? minkowski_sum(sums[rest], P[top]) : P[top];
    Integer e = normalized_volume(sums[S]);
    int size = __builtin_popcountll(S);
    if ((n - size) % 2) acc -= e;
    else acc += e;
  }
  Integer nf = factorial(static_cast<unsigned>(n));
  if (acc % nf != 0 || acc < 0) throw std::logic_error("polarization produced a non-integral mixed multiplicity");
  return acc / nf;
}

inline NewtonPolyhedron simplex(std::size_t n, std::int64_t r) {
  std::vector<geometry::Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    geometry::Point p(n, 0);
    p[i] = r;
    pts.push_back(std::move(p));
  }
  return NewtonPolyhedron::from_points(n, std::move(pts));
}

// e(I_1 + J^r, ..., I_n + J^r), J given by its polyhedron.
inline Integer enlarged_mixed(const std::vector<NewtonPolyhedron>& P, const NewtonPolyhedron& J, std::int64_t r) {
  if (r == 0) return 0;  // every entry becomes the unit ideal
  auto Jr = J.scaled(r);
  std::vector<NewtonPolyhedron> Q;
  for (const auto& p : P) Q.push_back(p.empty() ? Jr : hull_union(p, Jr));
  return mixed_volume(Q);
}

inline std::vector<NewtonPolyhedron> polyhedra(const IdealTuple& T) {
  std::vector<NewtonPolyhedron> P;
  for (const auto& I : T) P.push_back(I.is_zero() ? NewtonPolyhedron(T.dimension()) : NewtonPolyhedron::of(I));
  return P;
}

}  // namespace detail

inline MultiplicityValue samuel_multiplicity(const MonomialIdeal& I) {
  if (!I.has_finite_colength()) throw InputError("Samuel multiplicity needs a finite-colength ideal: " + I.str());
  return {detail::normalized_volume(NewtonPolyhedron::of(I)), MultiplicityMethod::covolume, {}};
}

inline MultiplicityValue mixed_multiplicity(const IdealTuple& T) {
  for (const auto& I : T)
    if (!I.has_finite_colength())
      throw InputError("mixed multiplicity needs finite-colength entries (use sigma): " + I.str());
  return {detail::mixed_volume(detail::polyhedra(T)), MultiplicityMethod::polarization, {}};
}

// ---------------------------------------------------------------------------
// Oracles.

// e(I) as the n-th finite difference of k -> colength(I^k), read off once two
// consecutive differences agree.
inline Integer oracle_colength_limit(const MonomialIdeal& I, int max_power = 14) {
  if (!I.has_finite_colength()) throw InputError("colength oracle needs a finite-colength ideal");
  const std::size_t n = I.dimension();
  std::vector<Integer> values;
  MonomialIdeal Ik = I;
  auto nth_difference = [&](std::size_t start) {
    Integer d = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      Integer term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * values[start + j];
      if ((n - j) % 2) d -= term;
      else d += term;
    }
    return d;
  };
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) Ik = Ik * I;
    values.push_back(*colength(Ik));
    if (values.size() >= n + 3) {
      std::size_t last = values.size() - n - 1;
      if (nth_difference(last) == nth_difference(last - 1)) return nth_difference(last);
    }
  }
  throw ResourceError("colength oracle: differences did not settle by power " + std::to_string(max_power));
}

struct GenericTrial {
  std::vector<Polynomial> elements;
  Count colength;  // nullopt: exceeded the bound (infinite-colength evidence)
  Integer reached;  // last truncated dimension seen
};

struct GenericOracleResult {
  Count value;  // minimum finite colength over trials
  std::vector<GenericTrial> trials;
  bool all_singular() const { return !value.has_value(); }
};

struct OracleOptions {
  std::uint64_t seed = 1;
  int trials = 5;
  std::int64_t coefficient_bound = 1000000;
  std::optional<Integer> upper_bound;
  unsigned jobs = 1;
};

// Random combinations g_i of the generators of I_i; colength of <g> at 0.
inline GenericOracleResult oracle_generic_multiplicity(const IdealTuple& T, const OracleOptions& opt = {}) {
  const std::size_t n = T.dimension();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> coef(-opt.coefficient_bound, opt.coefficient_bound);
  GenericOracleResult out;
  for (int t = 0; t < opt.trials; ++t) {
    GenericTrial trial;
    for (const auto& I : T) {
      Polynomial g(n);
      for (const auto& k : I.generators()) {
        std::int64_t c = 0;
        while (c == 0) c = coef(rng);
        g.add_term(k, Rational(c));
      }
      trial.elements.push_back(std::move(g));
    }
    out.trials.push_back(std::move(trial));
  }
  detail::parallel_for(out.trials.size(), opt.jobs, [&](std::size_t t) {
    auto& trial = out.trials[t];
    for (const auto& g : trial.elements)
      if (g.is_zero()) return;  // zero entry: the germ set is everything
    auto lc = groebner::local_colength(n, trial.elements, opt.upper_bound);
    trial.colength = lc.value;
    trial.reached = lc.last_dimension;
  });
  for (const auto& trial : out.trials)
    if (trial.colength && (!out.value || *trial.colength < *out.value)) out.value = trial.colength;
  return out;
}

// ---------------------------------------------------------------------------
// Rees' mixed multiplicity.

struct SigmaOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool cross_check = false;  // run the generic oracle even when stabilized
  std::int64_t max_r = std::int64_t{1} << 16;
};

inline std::int64_t sigma_cutoff(const IdealTuple& T) {
  std::int64_t m = 0;
  for (const auto& I : T)
    for (const auto& g : I.generators())
      for (int v : g.entries()) m = std::max<std::int64_t>(m, v);
  return static_cast<std::int64_t>(T.dimension()) * (1 + m);
}

// The sequence e(I_i + J^r) as a memoized function of r.
class EnlargedSequence {
 public:
  EnlargedSequence(const IdealTuple& T, const MonomialIdeal& J)
      : P_(detail::polyhedra(T)), J_(NewtonPolyhedron::of(J)) {
    if (J.dimension() != T.dimension()) throw InputError("relative ideal dimension mismatch");
    if (!J.has_finite_colength()) throw InputError("relative ideal must have finite colength: " + J.str());
  }
  explicit EnlargedSequence(const IdealTuple& T) : EnlargedSequence(T, MonomialIdeal::maximal(T.dimension())) {}

  const Integer& at(std::int64_t r) {
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    return cache_[r] = detail::enlarged_mixed(P_, J_, r);
  }

 private:
  std::vector<NewtonPolyhedron> P_;
  NewtonPolyhedron J_;
  std::map<std::int64_t, Integer> cache_;
};

namespace detail {

// A coordinate subspace S on which fewer than |S| entries have a generator
// supported in S. Generic elements then restrict to fewer than |S| equations
// in |S| variables, all vanishing at 0, so their common zeros through the
// origin have positive dimension and sigma is infinite.
struct Obstruction {
  std::vector<std::size_t> subspace;
  std::size_t meeting = 0;
};

inline std::optional<Obstruction> coordinate_obstruction(const IdealTuple& T) {
  const std::size_t n = T.dimension();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::size_t size = std::popcount(mask), count = 0;
    for (const auto& I : T) {
      bool meets = std::any_of(I.generators().begin(), I.generators().end(), [&](const ExponentVector& k) {
        for (std::size_t i = 0; i < n; ++i)
          if (!(mask >> i & 1u) && k[i] != 0) return false;
        return true;
      });
      if (meets) ++count;
    }
    if (count < size) {
      Obstruction ob{{}, count};
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) ob.subspace.push_back(i);
      return ob;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline MultiplicityValue sigma(const IdealTuple& T, const SigmaOptions& opt = {},
                               const std::optional<MonomialIdeal>& J = std::nullopt) {
  if (T.all_finite_colength() && !J) {
    auto v = mixed_multiplicity(T);
    if (opt.cross_check) {
      OracleOptions oo;
      oo.seed = opt.seed;
      oo.jobs = opt.jobs;
      oo.upper_bound = *v.value;
      auto orc = oracle_generic_multiplicity(T, oo);
      if (orc.value && *orc.value == *v.value) v.evidence.push_back("generic oracle agrees");
      else v.evidence.push_back("generic oracle did not confirm the mixed multiplicity");
    }
    return v;
  }
  EnlargedSequence seq = J ? EnlargedSequence(T, *J) : EnlargedSequence(T);
  const std::int64_t rstar = sigma_cutoff(T);

  OracleOptions oo;
  oo.seed = opt.seed;
  oo.jobs = opt.jobs;

  auto infinite_with_evidence = [&](std::string reason) {
    // A generic colength is at least every e(r), so exceeding e(r* + 1)
    // already corroborates the proof in `reason`.
    Integer bound = seq.at(rstar + 1);
    oo.upper_bound = bound;
    MultiplicityValue out{std::nullopt, MultiplicityMethod::oracle, {std::move(reason)}};
    // The reason already proves infinity; the oracle is corroboration only.
    GenericOracleResult orc;
    try {
      orc = oracle_generic_multiplicity(T, oo);
    } catch (const ResourceError& e) {
      out.evidence.push_back(std::string("generic oracle stopped at its resource cap: ") + e.what());
      return out;
    }
    if (!orc.all_singular())
      throw std::logic_error("sigma: generic oracle found finite colength " + orc.value->str() +
                             " although the tuple has a coordinate obstruction");
    out.evidence.push_back("all " + std::to_string(orc.trials.size()) +
                           " generic trials exceeded colength bound " + bound.str());
    return out;
  };

  if (auto ob = detail::coordinate_obstruction(T)) {
    std::string vars;
    for (auto i : ob->subspace) vars += (vars.empty() ? "x" : ", x") + std::to_string(i + 1);
    return infinite_with_evidence(std::to_string(ob->meeting) + " entries have a generator in the variables {" +
                                  vars + "}, fewer than " + std::to_string(ob->subspace.size()));
  }

  const Integer a = seq.at(rstar), b = seq.at(rstar + 1);
  if (a == b) {
    MultiplicityValue out{a, MultiplicityMethod::stabilized,
                          {"e(r) = " + a.str() + " at r* = " + std::to_string(rstar) + " and r* + 1"}};
    if (opt.cross_check) {
      oo.upper_bound = a;
      auto orc = oracle_generic_multiplicity(T, oo);
      if (orc.value && *orc.value == a) out.evidence.push_back("generic oracle agrees");
      else out.evidence.push_back("generic oracle did not confirm the stabilized value");
    }
    return out;
  }

  // Still growing at the cutoff: let the oracle decide.
  oo.upper_bound = 4 * b + 100;
  auto orc = oracle_generic_multiplicity(T, oo);
  if (orc.all_singular()) {
    MultiplicityValue out{std::nullopt, MultiplicityMethod::oracle,
                          {"e(r) still increasing at r* = " + std::to_string(rstar)}};
    out.evidence.push_back("all " + std::to_string(orc.trials.size()) +
                           " generic trials exceeded colength bound " + oo.upper_bound->str());
    return out;
  }
  // e(r) <= sigma <= colength of any g, so reaching v pins sigma down.
  const Integer& v = *orc.value;
  for (std::int64_t r = rstar + 1; r <= opt.max_r; r *= 2) {
    const Integer& e = seq.at(r);
    if (e == v)
      return {v, MultiplicityMethod::oracle,
              {"generic colength " + v.str() + " attained by e(r) at r = " + std::to_string(r)}};
    if (e > v) throw std::logic_error("sigma: e(r) exceeds a generic colength");
  }
  throw ResourceError("sigma: sequence did not reach the generic colength by r = " + std::to_string(opt.max_r));
}

// Least r >= 0 with e(I_1 + J^r, ..., I_n + J^r) = sigma(T).
inline std::int64_t r_number(const IdealTuple& T, const std::optional<MonomialIdeal>& J = std::nullopt,
                             const SigmaOptions& opt = {}) {
  auto s = sigma(T, opt);
  if (!s.value) throw HypothesisError("r-number needs finite sigma for " + T.str());
  EnlargedSequence seq = J ? EnlargedSequence(T, *J) : EnlargedSequence(T);
  const Integer& target = *s.value;
  if (seq.at(0) == target) return 0;
  std::int64_t hi = 1;
  while (seq.at(hi) != target) {
    if (seq.at(hi) > target) throw std::logic_error("r_number: e(r) exceeds sigma");
    if (hi > opt.max_r) throw ResourceError("r_number: no stabilization by r = " + std::to_string(opt.max_r));
    hi *= 2;
  }
  std::int64_t lo = hi / 2;  // e(lo) < target (or lo = 0)
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (seq.at(mid) == target) hi = mid;
    else lo = mid;
  }
  return hi;
}

}  // namespace lojex
