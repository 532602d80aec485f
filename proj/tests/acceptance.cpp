// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <lojex/cli.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>

using namespace lojex;

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

MonomialIdeal random_ideal(Rng& rng, std::size_t n, int max_exp, bool finite) {
  std::vector<ExponentVector> g;
  for (std::size_t i = 0; i < n; ++i)
    if (finite || rng() % 3) g.push_back(ExponentVector::unit(n, i, pick(rng, 1, max_exp)));
  for (int j = pick(rng, 0, 3); j > 0; --j) {
    ExponentVector k(n);
    for (std::size_t i = 0; i < n; ++i) k.set(i, pick(rng, 0, max_exp - 1));
    if (k.degree() > 0) g.push_back(k);
  }
  if (g.empty()) g.push_back(ExponentVector::unit(n, 0, 1));
  return MonomialIdeal(n, g);
}

IdealTuple random_tuple(Rng& rng, std::size_t n, int max_exp, bool finite) {
  std::vector<MonomialIdeal> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_ideal(rng, n, max_exp, finite));
  return IdealTuple(v);
}

Weights random_weights(Rng& rng, std::size_t n) {
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = pick(rng, 1, 3);
  return Weights(w);
}

// Throws with a message on the first violation.
void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

struct Outcome {
  bool passed;
  std::string note;
};

int failures = 0;

void criterion(const char* id, const char* name, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = {true, body()};
  } catch (const std::exception& e) {
    o = {false, e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.passed) ++failures;
  std::printf("%s %-3s %s: %s (%.1fs)\n", o.passed ? "PASS" : "FAIL", id, name, o.note.c_str(), secs);
  std::fflush(stdout);
}

// --- 2 ---------------------------------------------------------------------
std::string oracle_equivalence() {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    auto I = random_ideal(rng, 2 + i % 2, 5, true);
    auto e = samuel_multiplicity(I);
    auto o = oracle_colength_limit(I);
    require(e.value && *e.value == o, "e(" + I.str() + ") = " + e.str() + " but the colength limit is " + o.str());
  }
  return "200 ideals";
}

// --- 3 ---------------------------------------------------------------------
std::string mixed_properties() {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 2;
    auto T = random_tuple(rng, n, n == 2 ? 5 : 3, true);
    auto e = mixed_multiplicity(T);
    require(e.value.has_value(), "infinite mixed multiplicity for " + T.str());

    auto perm = T.entries();
    std::shuffle(perm.begin(), perm.end(), rng);
    require(mixed_multiplicity(IdealTuple(perm)).value == e.value, "not symmetric: " + T.str());

    require(mixed_multiplicity(IdealTuple::diagonal(T[0])).value == samuel_multiplicity(T[0]).value,
            "diagonal differs from e(I) for " + T[0].str());

    OracleOptions oo;
    oo.seed = 100 + i;
    oo.upper_bound = *e.value;
    auto orc = oracle_generic_multiplicity(T, oo);
    require(orc.value && *orc.value == *e.value,
            "generic colength " + (orc.value ? orc.value->str() : std::string("none")) + " vs " + e.str() +
                " for " + T.str());
  }
  return "50 tuples: symmetry, diagonal, generic oracle";
}

// --- 4 ---------------------------------------------------------------------
std::string property_suites() {
  Rng rng(4);
  int rp = 0, rev = 0, lp = 0;
  while (rp < 30) {
    const std::size_t n = 2 + rp % 2;
    auto T = random_tuple(rng, n, 3, true);
    MonomialIdeal J = rp % 3 == 0 ? MonomialIdeal::maximal(n) : random_ideal(rng, n, 3, true);
    const auto r = r_number(T, J);
    for (int s : {2, 3}) {
      require(r_number(T.power(s), J) <= s * r, "r_J(T^s) > s r_J(T) for " + T.str() + ", J = " + J.str());
      require(s * r_number(T, power(J, s)) >= r, "r_{J^s}(T) < r_J(T)/s for " + T.str() + ", J = " + J.str());
    }
    ++rp;
  }
  while (rev < 30) {
    const std::size_t n = 2 + rev % 2;
    auto T = random_tuple(rng, n, 3, false);
    auto before = sigma(T).value;
    auto entries = T.entries();
    const auto i = rng() % n;
    auto gens = entries[i].generators();
    ExponentVector k(n);
    for (std::size_t a = 0; a < n; ++a) k.set(a, pick(rng, 0, 3));
    if (k.degree() == 0) k = ExponentVector::unit(n, 0, 2);
    gens.push_back(k);
    entries[i] = MonomialIdeal(n, gens);
    auto after = sigma(IdealTuple(entries)).value;
    require(!before || (after && *after <= *before), "sigma grew after adding a generator to " + T.str());
    ++rev;
  }
  while (lp < 10) {
    const std::size_t n = 2 + lp % 2;
    auto w = random_weights(rng, n);
    std::int64_t l = 1;
    for (auto x : w.entries()) l = std::lcm(l, x);
    std::vector<std::int64_t> r(n);
    for (auto& x : r) x = l * pick(rng, 1, 2);
    auto T = filtration_tuples(w, r).A;
    LojSetOptions o;
    o.weights = w;
    auto base = loj_set(T, std::nullopt, o);
    if (base.certificate != Certificate::ExactByMatching) continue;
    ++lp;
    for (int s : {2, 3}) {
      auto up = loj_set(T.power(s), std::nullopt, o);
      require(up.is_exact() && up.value == ExtRational(s * base.value.value()), "L0(T^s) != s L0(T) for " + T.str());
      auto rel = loj_set(T, MonomialIdeal::maximal_power(n, s), o);
      require(rel.is_exact() && rel.value == ExtRational(base.value.value() / s),
              "L_{m^s}(T) != L0(T)/s for " + T.str());
    }
  }
  return "rpowers 30, reverseincl 30, Lpowers 10";
}

// --- 5 ---------------------------------------------------------------------
std::string duality() {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto I = random_ideal(rng, 2 + i % 2, 6, true);
    auto L = loj_monomial_ideal(I).value;
    auto nu = asymptotic_order(I, MonomialIdeal::maximal(I.dimension()));
    require(!nu.is_infinite() && L.value() * nu.value() == 1, "L0 * nu-bar != 1 for " + I.str());
  }
  return "100 ideals";
}

// --- 6 ---------------------------------------------------------------------
std::string chain() {
  Rng rng(6);
  int done = 0, matched = 0;
  while (done < 20) {
    const std::size_t n = 2 + done % 2;
    auto w = random_weights(rng, n);
    auto T = random_tuple(rng, n, 4, true);
    LojSetOptions o;
    o.weights = w;
    auto bc = bound_chain(T, w, true, o);
    if (!bc.sigma_A_finite || !bc.hypotheses_hold()) continue;
    ++done;
    // Each exponent lies in [lower bound, computed value].
    auto lo = [](const ExponentResult& r) { return r.lower_bound.value_or(r.value.value()); };
    auto hi = [](const ExponentResult& r) { return r.value.value(); };
    const auto &t = *bc.tuple, &a = *bc.A, &b = *bc.B;
    require(lo(t) <= hi(a) && lo(a) <= hi(b) && lo(b) <= bc.bound, "chain violated for " + T.str());
    if (bc.witness) {
      ++matched;
      for (const auto* r : {&t, &a, &b})
        require(r->is_exact() && r->value == ExtRational(bc.bound), "matching but no equality for " + T.str());
    }
  }
  return "20 instances, " + std::to_string(matched) + " with a w-matching";
}

// --- 7 ---------------------------------------------------------------------
Polynomial random_weighted_function(Rng& rng, const Weights& w, std::int64_t d) {
  const std::size_t n = w.size();
  Polynomial f(n);
  // Monomials of degree d, enumerated in a box.
  std::vector<ExponentVector> all;
  ExponentVector k(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      if (left == 0) all.push_back(k);
      return;
    }
    for (std::int64_t e = 0; e * w[i] <= left; ++e) {
      k.set(i, static_cast<int>(e));
      rec(i + 1, left - e * w[i]);
    }
    k.set(i, 0);
  };
  rec(0, d);
  for (const auto& m : all)
    if (m.pure_axis() || rng() % 3 == 0) f.add_term(m, Rational(pick(rng, 1, 9)));
  return f;
}

std::string upper_bound_soundness() {
  Rng rng(7);
  int done = 0, exact = 0;
  while (done < 25) {
    const std::size_t n = 2 + done % 2;
    auto w = random_weights(rng, n);
    const std::int64_t d = pick(rng, 4, n == 2 ? 12 : 8);
    auto f = random_weighted_function(rng, w, d);
    if (f.term_count() < 2 || !is_isolated_singularity(f, w)) continue;
    ++done;
    GradientOptions o;
    o.seed = done;
    auto r = loj_gradient(f, w, o);
    const Rational bound = ratio(d - w.min(), w.min());
    require(!r.value.is_infinite() && r.value.value() <= bound, "value above (d - q)/q for " + f.str());
    if (r.is_exact()) {
      ++exact;
      LojSetOptions lo;
      lo.schedule = {1, 2, 3, 4};
      auto best = loj_set(gradient_ideals(f), std::nullopt, lo).trace_minimum();
      require(!best || r.value.value() <= *best, "exact value above a trace ratio for " + f.str());
    }
  }
  return "25 weighted homogeneous functions, " + std::to_string(exact) + " exact";
}

}  // namespace

int main() {
  auto corpus = cli::paper_corpus(1);
  for (const auto& it : corpus) {
    if (!it.passed) ++failures;
    std::printf("%s %-3s %s: %s\n", it.passed ? "PASS" : "FAIL", it.id.c_str(), it.name.c_str(), it.detail.c_str());
  }
  criterion("2", "oracle equivalence", oracle_equivalence);
  criterion("3", "mixed multiplicity properties", mixed_properties);
  criterion("4", "property suites", property_suites);
  criterion("5", "duality", duality);
  criterion("6", "chain of inequalities", chain);
  criterion("7", "upper-bound soundness", upper_bound_soundness);
  std::printf("%d failing criteria\n", failures);
  return failures == 0 ? 0 : 1;
}
