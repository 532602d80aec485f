#pragma once

// Lojasiewicz exponents of monomial ideals, ideal tuples and gradients of
// semi-weighted homogeneous germs.

#include <lojex/groebner.hpp>
#include <lojex/matching.hpp>
#include <lojex/multiplicity.hpp>
#include <lojex/parallel.hpp>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace lojex {

enum class Certificate { ExactByMatching, ExactByAxis, ExactByKOP, ExactByDivisibility, BestFoundUpperBound };

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::ExactByMatching: return "ExactByMatching";
    case Certificate::ExactByAxis: return "ExactByAxis";
    case Certificate::ExactByKOP: return "ExactByKOP";
    case Certificate::ExactByDivisibility: return "ExactByDivisibility";
    case Certificate::BestFoundUpperBound: return "BestFoundUpperBound";
  }
  return "?";
}

struct TraceEntry {
  std::int64_t s = 0;
  std::int64_t r = 0;
  Rational ratio;
};

struct ExponentResult {
  ExtRational value;
  Certificate certificate = Certificate::BestFoundUpperBound;
  std::vector<TraceEntry> trace;
  std::optional<std::int64_t> determinacy;  // floor(value) + 1, exact absolute exponents only
  std::optional<MatchingWitness> witness;
  std::optional<Rational> lower_bound;
  std::string justification;
  std::vector<std::string> warnings;

  bool is_exact() const { return certificate != Certificate::BestFoundUpperBound; }

  std::optional<Rational> trace_minimum() const {
    std::optional<Rational> m;
    for (const auto& t : trace)
      if (!m || t.ratio < *m) m = t.ratio;
    return m;
  }
};

// ---------------------------------------------------------------------------
// Asymptotic Samuel function.

enum class OrderMode { asymptotic, plain };

namespace detail {

inline ExtRational facet_order(const NewtonPolyhedron& P, const ExponentVector& k) {
  std::optional<Rational> best;
  for (const auto& f : P.facets()) {
    Integer s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += Integer(f.normal[i]) * k[i];
    Rational q = ratio(s, f.offset);
    if (!best || q < *best) best = q;
  }
  if (!best) return ExtRational::infinity();  // I is the unit ideal
  return *best;
}

inline ExtRational plain_order(const MonomialIdeal& I, const ExponentVector& k) {
  auto bar = facet_order(NewtonPolyhedron::of(I), k);
  if (bar.is_infinite()) return bar;
  // nu <= nu-bar, so search downward from its floor.
  for (auto r = static_cast<std::int64_t>(floor_of(bar.value())); r >= 1; --r)
    if (power(I, static_cast<int>(r)).contains(k)) return ExtRational(r);
  return ExtRational(0);
}

}  // namespace detail

using OrderArgument = std::variant<ExponentVector, Polynomial, MonomialIdeal>;

// nu-bar_I(h) (asymptotic) or nu_I(x^k) (plain, monomial argument only).
inline ExtRational asymptotic_order(const MonomialIdeal& I, const OrderArgument& h,
                                    OrderMode mode = OrderMode::asymptotic) {
  if (I.is_zero()) throw InputError("order with respect to the zero ideal");
  std::vector<ExponentVector> points;
  if (auto* k = std::get_if<ExponentVector>(&h)) {
    points.push_back(*k);
  } else if (auto* p = std::get_if<Polynomial>(&h)) {
    if (p->is_zero()) throw InputError("order of the zero polynomial");
    points = p->support();
  } else {
    const auto& J = std::get<MonomialIdeal>(h);
    if (J.is_zero()) throw InputError("order of the zero ideal");
    points = J.generators();
  }
  for (const auto& k : points)
    if (k.size() != I.dimension()) throw InputError("order: dimension mismatch");
  if (mode == OrderMode::plain) {
    if (points.size() != 1) throw InputError("plain order is defined here for monomial arguments only");
    return detail::plain_order(I, points.front());
  }
  const auto P = NewtonPolyhedron::of(I);
  ExtRational best = ExtRational::infinity();
  for (const auto& k : points) best = std::min(best, detail::facet_order(P, k));
  return best;
}

// ---------------------------------------------------------------------------
// Exponents of single ideals.

inline ExponentResult loj_monomial_ideal(const MonomialIdeal& J) {
  if (!J.has_finite_colength()) throw InputError("Lojasiewicz exponent needs finite colength: " + J.str());
  const auto P = NewtonPolyhedron::of(J);
  Rational v = 0;
  for (const auto& a : P.axis_intersections()) v = std::max(v, a.value());
  auto dual = asymptotic_order(J, MonomialIdeal::maximal(J.dimension()));
  if (v != 0 && (dual.is_infinite() || dual.value() * v != 1))
    throw std::logic_error("axis maximum and facet order disagree for " + J.str());
  ExponentResult out;
  out.value = v;
  out.certificate = Certificate::ExactByAxis;
  out.justification = "monomial ideal: largest axis intersection of its Newton polyhedron";
  out.determinacy = static_cast<std::int64_t>(floor_of(v)) + 1;
  return out;
}

// min{p/q : J^p inside the integral closure of I^q}.
inline Rational loj_relative_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dimension() != J.dimension()) throw InputError("relative exponent: dimension mismatch");
  if (!I.has_finite_colength() || !J.has_finite_colength())
    throw InputError("relative exponent needs finite-colength ideals");
  if (J == MonomialIdeal::unit(J.dimension())) throw InputError("relative exponent against the unit ideal");
  const auto PI = NewtonPolyhedron::of(I);
  const auto PJ = NewtonPolyhedron::of(J);
  Rational best = 0;
  for (const auto& v : PJ.vertices())
    for (const auto& f : PI.facets()) {
      Integer s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += Integer(f.normal[i]) * v[i];
      best = std::max(best, ratio(f.offset, s));
    }
  return best;
}

// ---------------------------------------------------------------------------
// Tuples.

inline Rational degree_weight_bound(const std::vector<std::int64_t>& degrees, const Weights& w) {
  return ratio(*std::max_element(degrees.begin(), degrees.end()), w.min());
}

struct FiltrationTuples {
  IdealTuple A, B;
};

inline FiltrationTuples filtration_tuples(const Weights& w, const std::vector<std::int64_t>& degrees) {
  std::vector<MonomialIdeal> A, B;
  for (auto r : degrees) {
    auto p = filtration_pieces(w, r);
    A.push_back(std::move(p.A));
    B.push_back(std::move(p.B));
  }
  return {IdealTuple(std::move(A)), IdealTuple(std::move(B))};
}

struct LojSetOptions {
  std::optional<Weights> weights;
  std::vector<std::int64_t> schedule;  // empty: default
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

inline std::vector<std::int64_t> default_schedule(const std::optional<Weights>& w) {
  std::vector<std::int64_t> s;
  if (!w) {
    for (std::int64_t i = 1; i <= 12; ++i) s.push_back(i);
    return s;
  }
  const std::int64_t wbar = w->product();
  for (std::int64_t i = 1; i <= 2 * wbar; ++i) s.push_back(i);
  for (std::int64_t k = 3; k <= 6; ++k) s.push_back(k * wbar);
  return s;
}

// t with J = m^t, if any.
inline std::optional<int> maximal_power_exponent(const MonomialIdeal& J) {
  auto t = J.pure_power_exponent(0);
  if (!t || *t < 1) return std::nullopt;
  if (J == MonomialIdeal::maximal_power(J.dimension(), *t)) return t;
  return std::nullopt;
}

namespace detail {

// The matching hypotheses: sigma(A-tuple) finite and equal to sigma(T).
struct MatchingCheck {
  std::vector<std::int64_t> degrees;
  std::optional<MatchingWitness> witness;
  Count sigma_T, sigma_A;
  bool hypotheses = false;
  std::vector<std::string> notes;
};

inline MatchingCheck matching_check(const IdealTuple& T, const Weights& w, const SigmaOptions& so) {
  MatchingCheck mc;
  mc.degrees = weighted_degrees(T, w);
  mc.witness = check_w_matching(T, w);
  auto tuples = filtration_tuples(w, mc.degrees);
  auto sA = sigma(tuples.A, so);
  auto sT = sigma(T, so);
  mc.sigma_A = sA.value;
  mc.sigma_T = sT.value;
  if (!sA.value) mc.notes.push_back("sigma of the A-tuple is infinite");
  else if (!sT.value || *sT.value != *sA.value) mc.notes.push_back("sigma(T) differs from sigma of the A-tuple");
  else mc.hypotheses = true;
  if (sA.method == MultiplicityMethod::stabilized || sT.method == MultiplicityMethod::stabilized)
    mc.notes.push_back("sigma equality verified through the stabilization cutoff");
  return mc;
}

}  // namespace detail

// L_J(T) = min_s r_J(T^s)/s, sampled on a schedule, upgraded to an exact
// value when a certificate applies.
inline ExponentResult loj_set(const IdealTuple& T, const std::optional<MonomialIdeal>& J_in = std::nullopt,
                              const LojSetOptions& opt = {}) {
  const std::size_t n = T.dimension();
  const MonomialIdeal J = J_in.value_or(MonomialIdeal::maximal(n));
  if (J.dimension() != n) throw InputError("relative ideal dimension mismatch");
  if (!J.has_finite_colength()) throw InputError("relative ideal must have finite colength: " + J.str());
  SigmaOptions so;
  so.seed = opt.seed;
  so.jobs = opt.jobs;
  auto sig = sigma(T, so);
  if (!sig.value) throw HypothesisError("Lojasiewicz exponent of a tuple needs finite sigma: " + T.str());

  ExponentResult out;
  const Rational lower = loj_relative_ideal(T.sum(), J);
  out.lower_bound = lower;

  std::optional<Rational> exact;
  std::string exact_reason;
  if (opt.weights) {
    auto t = maximal_power_exponent(J);
    auto mc = detail::matching_check(T, *opt.weights, so);
    out.warnings.insert(out.warnings.end(), mc.notes.begin(), mc.notes.end());
    if (mc.witness && mc.hypotheses && t) {
      exact = degree_weight_bound(mc.degrees, *opt.weights) / *t;
      out.witness = mc.witness;
      exact_reason = "w-matching with sigma(T) = sigma(A-tuple)";
      if (*t > 1) exact_reason += ", scaled by 1/" + std::to_string(*t) + " for J = m^" + std::to_string(*t);
    }
  }
  const Rational target = exact.value_or(lower);

  auto schedule = opt.schedule.empty() ? default_schedule(opt.weights) : opt.schedule;
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
  if (schedule.empty() || schedule.front() < 1) throw InputError("schedule entries must be >= 1");

  // Batches of `jobs` values; the trace is cut at the first hit so the
  // output does not depend on the thread count.
  const std::size_t batch = std::max(1u, opt.jobs);
  bool hit = false;
  for (std::size_t start = 0; start < schedule.size() && !hit; start += batch) {
    std::size_t end = std::min(schedule.size(), start + batch);
    std::vector<std::int64_t> rs(end - start);
    detail::parallel_for(rs.size(), opt.jobs, [&](std::size_t k) {
      SigmaOptions inner = so;
      inner.jobs = 1;
      rs[k] = r_number(T.power(static_cast<int>(schedule[start + k])), J, inner);
    });
    for (std::size_t k = 0; k < rs.size() && !hit; ++k) {
      auto s = schedule[start + k];
      out.trace.push_back({s, rs[k], ratio(rs[k], s)});
      if (out.trace.back().ratio <= target) hit = true;
    }
  }

  // r_{sp} <= s r_p along the trace.
  std::map<std::int64_t, std::int64_t> by_s;
  for (const auto& e : out.trace) by_s[e.s] = e.r;
  for (const auto& [p, rp] : by_s)
    for (const auto& [q, rq] : by_s)
      if (q % p == 0 && rq > (q / p) * rp)
        throw std::logic_error("trace violates r(T^{sp}) <= s r(T^p) at p = " + std::to_string(p) +
                               ", sp = " + std::to_string(q));

  const Rational m = *out.trace_minimum();
  if (m < lower) throw std::logic_error("trace minimum below the ideal-sum lower bound");
  if (exact) {
    if (m < *exact) throw std::logic_error("exact value contradicted by the computed trace");
    out.value = *exact;
    out.certificate = Certificate::ExactByMatching;
    out.justification = exact_reason;
  } else if (m == lower) {
    out.value = lower;
    out.certificate = Certificate::ExactByAxis;
    out.justification = "trace meets the lower bound given by the sum of the ideals";
  } else {
    out.value = m;
    out.certificate = Certificate::BestFoundUpperBound;
    out.justification = "minimum of r(T^s)/s over the schedule";
  }
  if (out.is_exact() && J == MonomialIdeal::maximal(n))
    out.determinacy = static_cast<std::int64_t>(floor_of(out.value.value())) + 1;
  return out;
}

// ---------------------------------------------------------------------------
// Chain of inequalities for weighted tuples.

struct BoundChain {
  std::vector<std::int64_t> degrees;
  Rational bound;
  Count sigma_A, sigma_T;
  bool sigma_A_finite = false;
  bool sigma_equal = false;
  std::optional<MatchingWitness> witness;
  bool exact = false;  // bound is the common value
  std::vector<std::string> warnings;
  // L_0 of the tuple itself, the A-tuple and the B-tuple, when requested.
  std::optional<ExponentResult> tuple, A, B;

  bool hypotheses_hold() const { return sigma_A_finite && sigma_equal; }
};

inline BoundChain bound_chain(const IdealTuple& T, const Weights& w, bool compute_pieces = false,
                              const LojSetOptions& opt = {}) {
  SigmaOptions so;
  so.seed = opt.seed;
  so.jobs = opt.jobs;
  auto mc = detail::matching_check(T, w, so);
  BoundChain bc;
  bc.degrees = mc.degrees;
  bc.bound = degree_weight_bound(mc.degrees, w);
  bc.sigma_A = mc.sigma_A;
  bc.sigma_T = mc.sigma_T;
  bc.sigma_A_finite = mc.sigma_A.has_value();
  bc.sigma_equal = mc.hypotheses;
  bc.witness = mc.witness;
  bc.warnings = mc.notes;
  bc.exact = bc.hypotheses_hold() && bc.witness.has_value();
  if (compute_pieces && bc.hypotheses_hold()) {
    LojSetOptions o = opt;
    o.weights = w;
    auto tuples = filtration_tuples(w, bc.degrees);
    bc.tuple = loj_set(T, std::nullopt, o);
    bc.A = loj_set(tuples.A, std::nullopt, o);
    bc.B = loj_set(tuples.B, std::nullopt, o);
  }
  return bc;
}

// ---------------------------------------------------------------------------
// Isolated singularities.

// p weighted homogeneous: the critical locus is invariant under the weighted
// C*-action, so it is {0} iff it is finite, iff the leading terms of a
// Groebner basis of the gradient contain a pure power of every variable.
inline bool is_isolated_singularity(const Polynomial& p, const Weights& w, std::size_t max_reductions = 20000) {
  if (p.dimension() != w.size()) throw InputError("weights and polynomial dimension differ");
  if (p.is_zero() || !is_weighted_homogeneous(p, w))
    throw InputError("isolated-singularity test needs a weighted homogeneous polynomial (pass p_w(f))");
  if (p.constant_term() != 0) throw InputError("isolated-singularity test needs p(0) = 0");
  const std::size_t n = p.dimension();
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = partial_derivative(p, i);
    if (d.is_zero()) return false;  // p is constant along x_i
    grad.push_back(std::move(d));
  }
  groebner::Options opt;
  opt.max_reductions = max_reductions;
  auto leads = groebner::leading_exponents(groebner::groebner_basis(n, grad, opt));
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const ExponentVector& k) {
      auto a = k.pure_axis();
      return k.is_zero() || (a && *a == i);
    });
    if (!pure) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Coordinate change making a weighted homogeneous germ convenient.

struct CoordinateChange {
  std::vector<std::size_t> k;                                  // k_i (0-based)
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> a;  // a_{j,i}
  std::vector<Polynomial> h;                                   // h_j, possibly zero
  std::vector<Polynomial> images;                              // x_j = y_j + h_j(y)
  int attempts = 0;
};

struct TransformResult {
  CoordinateChange change;
  Polynomial g;
};

inline TransformResult matching_coordinate_change(const Polynomial& f, const Weights& w, std::uint64_t seed = 1,
                                                  int max_attempts = 32) {
  const std::size_t n = f.dimension();
  if (w.size() != n) throw InputError("weights and polynomial dimension differ");
  auto cls = weighted_classification(f, w);
  if (!cls.is_weighted_homogeneous) throw HypothesisError("coordinate change needs a weighted homogeneous polynomial");
  const std::int64_t d = cls.degree;
  for (std::size_t i = 0; i < n; ++i)
    if (d % w[i] != 0)
      throw HypothesisError("coordinate change needs w_i | d for all i (w_" + std::to_string(i + 1) + " = " +
                            std::to_string(w[i]) + ", d = " + std::to_string(d) + ")");

  const auto supp = support(f);
  CoordinateChange ch;
  ch.k.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (supp.count(ExponentVector::unit(n, i, static_cast<int>(d / w[i])))) {
      ch.k[i] = i;
      continue;
    }
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < n && !found; ++k) {
      if (k == i || (d - w[k]) % w[i] != 0) continue;
      auto m = (d - w[k]) / w[i];
      if (m < 1) continue;
      auto mono = ExponentVector::unit(n, i, static_cast<int>(m)) + ExponentVector::unit(n, k);
      if (supp.count(mono)) found = k;
    }
    if (!found)
      throw InputError("no monomial x_k x_" + std::to_string(i + 1) +
                       "^m in the support: the polynomial does not have an isolated singularity");
    ch.k[i] = *found;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ch.k[i] != i && w[ch.k[i]] % w[i] != 0)
      throw std::logic_error("coordinate change: w_i does not divide w_{k_i}");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coef(1, 97);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    ch.attempts = attempt;
    ch.a.clear();
    ch.h.assign(n, Polynomial(n));
    ch.images.clear();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = ch.k[i];
      if (j == i) continue;
      auto c = coef(rng);
      ch.a[{j, i}] = c;
      ch.h[j].add_term(ExponentVector::unit(n, i, static_cast<int>(w[j] / w[i])), Rational(c));
    }
    for (std::size_t j = 0; j < n; ++j) ch.images.push_back(Polynomial::variable(n, j) + ch.h[j]);

    auto g = substitute(f, ch.images);
    if (g.is_zero()) continue;
    auto gc = weighted_classification(g, w);
    bool ok = gc.is_weighted_homogeneous && gc.degree == d && gc.is_convenient;
    for (std::size_t j = 0; j < n && ok; ++j)
      if (!ch.h[j].is_zero())
        ok = is_weighted_homogeneous(ch.h[j], w) && *weighted_degree(ch.h[j], w) == w[j];
    // Linear part of the change must be invertible.
    std::vector<std::vector<Integer>> lin(n, std::vector<Integer>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        lin[j][i] = boost::multiprecision::numerator(ch.images[j].coefficient(ExponentVector::unit(n, i)));
    ok = ok && geometry::determinant(lin) != 0;
    if (ok) return {ch, g};
  }
  throw ResourceError("coordinate change: no convenient image after " + std::to_string(max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Gradients.

// (d - min w) / min w for n = 3 when 2 w_i <= d; nullopt when inapplicable.
inline std::optional<Rational> kop_reference_formula(const Weights& w, std::int64_t d) {
  if (w.size() != 3) throw InputError("the reference formula is stated for n = 3 only");
  for (std::size_t i = 0; i < 3; ++i)
    if (2 * w[i] > d) return std::nullopt;
  return ratio(d - w.min(), w.min());
}

inline IdealTuple gradient_ideals(const Polynomial& f) {
  std::vector<MonomialIdeal> J;
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    auto d = partial_derivative(f, i);
    if (d.is_zero())
      throw HypothesisError("partial derivative in x" + std::to_string(i + 1) + " vanishes: not an isolated singularity");
    J.push_back(MonomialIdeal::from_support(d));
  }
  return IdealTuple(std::move(J));
}

struct GradientOptions {
  bool assume_isolated = false;
  std::optional<std::int64_t> degree;
  std::vector<std::int64_t> schedule;
  std::vector<std::int64_t> check_schedule{1};  // trace computed alongside exact answers
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

inline ExponentResult loj_gradient(const Polynomial& f, const Weights& w, const GradientOptions& opt = {}) {
  const std::size_t n = f.dimension();
  if (w.size() != n) throw InputError("weights and polynomial dimension differ");
  auto cls = weighted_classification(f, w);
  const std::int64_t d = cls.degree;
  if (opt.degree && *opt.degree != d)
    throw InputError("stated degree " + std::to_string(*opt.degree) + " differs from d_w(f) = " + std::to_string(d));
  const Polynomial p = principal_part(f, w);
  if (!opt.assume_isolated && !is_isolated_singularity(p, w))
    throw HypothesisError("principal part " + p.str() + " does not have an isolated singularity at 0");

  const IdealTuple J = gradient_ideals(f);
  const std::int64_t q = w.min();
  const Rational bound = ratio(d - q, q);

  LojSetOptions lo;
  lo.weights = w;
  lo.seed = opt.seed;
  lo.jobs = opt.jobs;

  ExponentResult out;
  auto finish_exact = [&](Certificate c, std::string why) {
    out.value = bound;
    out.certificate = c;
    out.justification = std::move(why);
    out.determinacy = static_cast<std::int64_t>(floor_of(bound)) + 1;
    if (!opt.check_schedule.empty()) {
      LojSetOptions chk = lo;
      chk.weights.reset();
      chk.schedule = opt.check_schedule;
      auto tr = loj_set(J, std::nullopt, chk);
      out.trace = tr.trace;
      out.lower_bound = tr.lower_bound;
      if (*tr.trace_minimum() < bound) throw std::logic_error("exact gradient exponent contradicted by its trace");
    }
    return out;
  };

  // (1) matching on the gradient ideals
  if (auto wit = check_w_matching(J, w)) {
    out.witness = wit;
    return finish_exact(Certificate::ExactByMatching, "gradient ideals admit a w-matching; value (d - min w)/min w");
  }
  // (2) all weights divide d: make p_w(f) convenient, which yields a matching
  bool divides = true;
  for (std::size_t i = 0; i < n; ++i) divides = divides && d % w[i] == 0;
  if (divides) {
    auto tr = matching_coordinate_change(p, w, opt.seed);
    auto wit = check_w_matching(gradient_ideals(tr.g), w);
    if (!wit) throw std::logic_error("convenient image of p_w(f) admits no w-matching");
    out.witness = wit;
    return finish_exact(Certificate::ExactByDivisibility,
                        "w_i | d for all i: after a weighted coordinate change p_w(f) is convenient");
  }
  // (3) n = 3, weighted homogeneous, 2 w_i <= d
  if (n == 3 && cls.is_weighted_homogeneous && kop_reference_formula(w, d))
    return finish_exact(Certificate::ExactByKOP, "n = 3, f weighted homogeneous, 2 w_i <= d");

  // (4) search
  lo.schedule = opt.schedule;
  auto res = loj_set(J, std::nullopt, lo);
  if (!res.is_exact()) {
    if (bound < res.value.value()) {
      res.value = bound;
      res.warnings.push_back("value is the gradient bound (d - min w)/min w, below every trace ratio");
    }
    res.justification = "upper bound: min of the trace and (d - min w)/min w";
  }
  if (res.is_exact()) res.determinacy = static_cast<std::int64_t>(floor_of(res.value.value())) + 1;
  else res.determinacy.reset();
  return res;
}

}  // namespace lojex
