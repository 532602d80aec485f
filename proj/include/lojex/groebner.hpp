#pragma once

// Buchberger-lite over Q with degrevlex, integer-primitive coefficients.
//
// Two uses: global bases of gradient systems (isolated-singularity test), and
// bases of <g> + m^N for local colengths. In the truncated mode m^N is never
// stored; every term of degree >= N is dropped, and the S-pairs against the
// implicit monomial generators become u * tail(h) for |u| = N - deg LT(h).

#include <lojex/poly.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace lojex::groebner {

struct DegRevLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct Term {
  ExponentVector exp;
  Integer coef;
};

// Terms in strictly decreasing degrevlex order, content 1, positive lead.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }

  static IntPoly from(const Polynomial& p) {
    Integer lcm_den = 1;
    for (const auto& [k, c] : p.terms())
      lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
    std::vector<Term> t;
    for (const auto& [k, c] : p.terms()) {
      Rational scaled = c * lcm_den;
      t.push_back({k, boost::multiprecision::numerator(scaled)});
    }
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return DegRevLexGreater{}(a.exp, b.exp); });
    return IntPoly(std::move(t));
  }

  Polynomial to_polynomial(std::size_t n) const {
    Polynomial p(n);
    for (const auto& t : terms_) p.add_term(t.exp, Rational(t.coef));
    return p;
  }

 private:
  void normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef == 0; }),
                 terms_.end());
    if (terms_.empty()) return;
    Integer g = 0;
    for (const auto& t : terms_) g = boost::multiprecision::gcd(g, t.coef);
    if (terms_.front().coef < 0) g = -g;
    if (g != 1)
      for (auto& t : terms_) t.coef /= g;
  }

  std::vector<Term> terms_;
};

struct Options {
  std::optional<int> truncation;  // work modulo m^N
  std::size_t max_reductions = 20000;
};

class Engine {
 public:
  Engine(std::size_t n, Options opt) : n_(n), opt_(opt) {}

  // Reduced basis of the input (plus m^N when truncating).
  std::vector<IntPoly> basis(const std::vector<IntPoly>& input) {
    for (const auto& f : input) insert(reduce(truncate(f)));
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        auto da = a.lcm.degree(), db = b.lcm.degree();
        if (da != db) return da < db;
        return DegRevLexGreater{}(b.lcm, a.lcm);
      });
      Pair p = *it;
      pairs_.erase(it);
      insert(reduce(s_polynomial(p)));
    }
    return interreduce();
  }

  std::size_t reductions() const { return reductions_; }

 private:
  struct Pair {
    std::size_t i;
    std::optional<std::size_t> j;  // nullopt: pair with an implicit m^N generator
    ExponentVector mult;            // for the implicit kind: u
    ExponentVector lcm;
  };

  IntPoly truncate(IntPoly f) const {
    if (!opt_.truncation) return f;
    std::vector<Term> keep;
    for (const auto& t : f.terms())
      if (t.exp.degree() < *opt_.truncation) keep.push_back(t);
    return IntPoly(std::move(keep));
  }

  // c * u * f without its first `skip` terms; not normalized, signs matter.
  static std::vector<Term> shifted(const IntPoly& f, const ExponentVector& u, const Integer& c, std::size_t skip) {
    std::vector<Term> t;
    for (std::size_t k = skip; k < f.terms().size(); ++k)
      t.push_back({f.terms()[k].exp + u, f.terms()[k].coef * c});
    return t;
  }

  IntPoly s_polynomial(const Pair& p) {
    const auto& f = basis_[p.i];
    if (!p.j) return truncate(IntPoly(shifted(f, p.mult, 1, 1)));
    const auto& g = basis_[*p.j];
    ExponentVector uf = quotient(p.lcm, f.lead().exp), ug = quotient(p.lcm, g.lead().exp);
    Integer gc = boost::multiprecision::gcd(f.lead().coef, g.lead().coef);
    Integer cf = g.lead().coef / gc, cg = f.lead().coef / gc;
    return truncate(combine(shifted(f, uf, cf, 1), shifted(g, ug, -cg, 1)));
  }

  static ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
    return ExponentVector(std::move(e));
  }

  static IntPoly combine(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::map<ExponentVector, Integer, DegRevLexGreater> acc;
    for (const auto& t : a) acc[t.exp] += t.coef;
    for (const auto& t : b) acc[t.exp] += t.coef;
    std::vector<Term> out;
    for (auto& [e, c] : acc)
      if (c != 0) out.push_back({e, c});
    return IntPoly(std::move(out));
  }

  // Full reduction by the current basis; the result is primitive.
  IntPoly reduce(const IntPoly& f) {
    if (f.is_zero()) return f;
    if (++reductions_ > opt_.max_reductions)
      throw ResourceError("Groebner basis: reduction budget of " + std::to_string(opt_.max_reductions) +
                          " exhausted");
    std::map<ExponentVector, Integer, DegRevLexGreater> work;
    for (const auto& t : f.terms()) work[t.exp] = t.coef;
    std::vector<Term> done;
    while (!work.empty()) {
      auto head = work.begin();
      const IntPoly* divisor = nullptr;
      for (const auto& g : basis_)
        if (g.lead().exp.divides(head->first)) {
          divisor = &g;
          break;
        }
      if (!divisor) {
        done.push_back({head->first, head->second});
        work.erase(head);
        continue;
      }
      Integer gc = boost::multiprecision::gcd(head->second, divisor->lead().coef);
      Integer scale = divisor->lead().coef / gc, factor = head->second / gc;
      ExponentVector u = quotient(head->first, divisor->lead().exp);
      if (scale != 1) {
        for (auto& [e, c] : work) c *= scale;
        for (auto& t : done) t.coef *= scale;
      }
      work.erase(head);
      for (std::size_t k = 1; k < divisor->terms().size(); ++k) {
        const auto& t = divisor->terms()[k];
        ExponentVector e = t.exp + u;
        if (opt_.truncation && e.degree() >= *opt_.truncation) continue;
        auto& slot = work[e];
        slot -= factor * t.coef;
        if (slot == 0) work.erase(e);
      }
      // Keep coefficient growth in check.
      Integer g = 0;
      for (const auto& [e, c] : work) g = boost::multiprecision::gcd(g, c);
      for (const auto& t : done) g = boost::multiprecision::gcd(g, t.coef);
      if (g > 1) {
        for (auto& [e, c] : work) c /= g;
        for (auto& t : done) t.coef /= g;
      }
    }
    return IntPoly(std::move(done));
  }

  void insert(IntPoly h) {
    if (h.is_zero()) return;
    const std::size_t id = basis_.size();
    const auto& lh = h.lead().exp;

    // Gebauer-Moeller: drop queued pairs made redundant by lh.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!p.j || !lh.divides(p.lcm)) return false;
      auto li = ExponentVector::lcm(basis_[p.i].lead().exp, lh);
      auto lj = ExponentVector::lcm(basis_[*p.j].lead().exp, lh);
      return li != p.lcm && lj != p.lcm;
    });

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < id; ++i)
      fresh.push_back({i, id, {}, ExponentVector::lcm(basis_[i].lead().exp, lh)});
    // Chain criterion among the new pairs, then the product criterion.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
        if (a == b) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) redundant = true;
      }
      if (!redundant) kept.push_back(fresh[a]);
    }
    for (auto& p : kept) {
      const auto& li = basis_[p.i].lead().exp;
      if (ExponentVector::lcm(li, lh).degree() == li.degree() + lh.degree()) continue;  // coprime
      pairs_.push_back(std::move(p));
    }

    if (opt_.truncation) {
      int k = *opt_.truncation - lh.degree();
      if (k > 0) {
        // Tail terms of degree deg(lh) vanish after multiplying by u.
        bool has_lower = std::any_of(h.terms().begin() + 1, h.terms().end(),
                                     [&](const Term& t) { return t.exp.degree() < lh.degree(); });
        if (has_lower) for_each_monomial(k, [&](const ExponentVector& u) {
            pairs_.push_back({id, std::nullopt, u, lh + u});
          });
      }
    }
    basis_.push_back(std::move(h));
  }

  void for_each_monomial(int degree, const std::function<void(const ExponentVector&)>& f) const {
    ExponentVector u(n_);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == n_) {
        u.set(i, left);
        f(u);
        return;
      }
      for (int e = left; e >= 0; --e) {
        u.set(i, e);
        rec(i + 1, left - e);
      }
      u.set(i, 0);
    };
    rec(0, degree);
  }

  std::vector<IntPoly> interreduce() {
    std::vector<IntPoly> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& a = basis_[j].lead().exp;
        const auto& b = basis_[i].lead().exp;
        if (a.divides(b) && (a != b || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    return minimal;
  }

  std::size_t n_;
  Options opt_;
  std::vector<IntPoly> basis_;
  std::vector<Pair> pairs_;
  std::size_t reductions_ = 0;
};

inline std::vector<IntPoly> groebner_basis(std::size_t n, const std::vector<Polynomial>& gens, Options opt = {}) {
  std::vector<IntPoly> in;
  for (const auto& g : gens) {
    if (g.dimension() != n) throw InputError("Groebner basis: dimension mismatch");
    in.push_back(IntPoly::from(g));
  }
  return Engine(n, opt).basis(in);
}

inline std::vector<ExponentVector> leading_exponents(const std::vector<IntPoly>& basis) {
  std::vector<ExponentVector> out;
  for (const auto& g : basis) out.push_back(g.lead().exp);
  return out;
}

// Number of monomials of degree < N outside the leading-term ideal.
inline Integer standard_monomials_below(std::size_t n, const std::vector<ExponentVector>& leads, int N) {
  Integer count = 0;
  ExponentVector k(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      for (const auto& l : leads)
        if (l.divides(k)) return;
      ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      k.set(i, e);
      // Later coordinates are zero here, so a dominated prefix ends the row.
      if (std::any_of(leads.begin(), leads.end(), [&](const auto& l) { return l.divides(k); })) break;
      rec(i + 1, left - e);
    }
    k.set(i, 0);
  };
  rec(0, N - 1);
  return count;
}

// dim C[x] / (<gens> + m^N).
inline Integer truncated_colength(std::size_t n, const std::vector<Polynomial>& gens, int N,
                                  std::size_t max_reductions = 20000) {
  Options opt;
  opt.truncation = N;
  opt.max_reductions = max_reductions;
  auto basis = groebner_basis(n, gens, opt);
  return standard_monomials_below(n, leading_exponents(basis), N);
}

struct LocalColength {
  std::optional<Integer> value;  // nullopt: exceeded the bound
  int certified_at = 0;          // N with dim(N) == dim(N+1)
  Integer last_dimension = 0;
};

// Colength of <gens> in the local ring at 0. dim(N) == dim(N+1) forces
// m^N inside <gens> + m^{N+1}, hence inside <gens> locally (Nakayama).
inline LocalColength local_colength(std::size_t n, const std::vector<Polynomial>& gens,
                                    std::optional<Integer> upper_bound = std::nullopt, int max_order = 512) {
  LocalColength out;
  for (int N = 2; N <= max_order; N *= 2) {
    Integer a = truncated_colength(n, gens, N);
    out.last_dimension = a;
    if (upper_bound && a > *upper_bound) return out;
    Integer b = truncated_colength(n, gens, N + 1);
    out.last_dimension = b;
    if (a == b) {
      out.value = a;
      out.certified_at = N;
      return out;
    }
    if (upper_bound && b > *upper_bound) return out;
  }
  throw ResourceError("local colength: order horizon exhausted");
}

}  // namespace lojex::groebner
