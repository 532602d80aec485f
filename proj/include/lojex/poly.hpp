#pragma once

// Exact multivariate polynomials over Q in a fixed number of variables.

#include <lojex/numeric.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lojex {

// Exponent vector k = (k_1, ..., k_n) of the monomial x^k. Entries are >= 0.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> entries) : e_(entries) { validate(); }
  explicit ExponentVector(std::vector<int> entries) : e_(std::move(entries)) { validate(); }

  static ExponentVector unit(std::size_t n, std::size_t axis, int power = 1) {
    ExponentVector k(n);
    k.e_.at(axis) = power;
    return k;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int v) {
    if (v < 0) throw InputError("negative exponent");
    e_.at(i) = v;
  }
  const std::vector<int>& entries() const { return e_; }

  std::int64_t degree() const { return std::accumulate(e_.begin(), e_.end(), std::int64_t{0}); }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  // x^this divides x^other.
  bool divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  // Index of the only nonzero entry, if x^k is a pure power.
  std::optional<std::size_t> pure_axis() const {
    std::optional<std::size_t> axis;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (axis) return std::nullopt;
      axis = i;
    }
    return axis;
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    require_same(a, b);
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  ExponentVector scaled(int s) const {
    ExponentVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }

  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    require_same(a, b);
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  static void require_same(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw InputError("exponent vectors of different dimension");
  }
  void validate() const {
    for (int v : e_)
      if (v < 0) throw InputError("negative exponent");
  }

  std::vector<int> e_;
};

// Graded lexicographic, larger first: total degree, then x1 > x2 > ... .
struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.entries() > b.entries();
  }
};

// Positive integer weights w = (w_1, ..., w_n).
class Weights {
 public:
  Weights() = default;
  Weights(std::initializer_list<std::int64_t> w) : w_(w) { validate(); }
  explicit Weights(std::vector<std::int64_t> w) : w_(std::move(w)) { validate(); }

  static Weights uniform(std::size_t n) { return Weights(std::vector<std::int64_t>(n, 1)); }

  std::size_t size() const { return w_.size(); }
  std::int64_t operator[](std::size_t i) const { return w_[i]; }
  const std::vector<std::int64_t>& entries() const { return w_; }

  std::int64_t min() const { return *std::min_element(w_.begin(), w_.end()); }

  // w1 * ... * wn
  std::int64_t product() const {
    std::int64_t p = 1;
    for (auto v : w_) {
      if (__builtin_mul_overflow(p, v, &p)) throw ResourceError("weight product overflows");
    }
    return p;
  }

  std::vector<std::size_t> min_indices() const {
    std::vector<std::size_t> out;
    auto m = min();
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] == m) out.push_back(i);
    return out;
  }

  std::int64_t dot(const ExponentVector& k) const {
    if (k.size() != w_.size()) throw InputError("weights and exponent dimension differ");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * k[i];
    return s;
  }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  void validate() const {
    if (w_.empty()) throw InputError("empty weight vector");
    for (auto v : w_)
      if (v < 1) throw InputError("weights must be >= 1");
  }
  std::vector<std::int64_t> w_;
};

// Weighted degree of a nonzero polynomial; nullopt encodes d_w(0) = +infinity.
using WeightedDegree = std::optional<std::int64_t>;

class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexGreater>;

  Polynomial() : n_(1) {}
  explicit Polynomial(std::size_t dimension) : n_(dimension) {
    if (n_ == 0) throw InputError("polynomial dimension must be >= 1");
  }

  static Polynomial constant(std::size_t n, const Rational& c) {
    Polynomial p(n);
    p.add_term(ExponentVector(n), c);
    return p;
  }
  static Polynomial monomial(const ExponentVector& k, const Rational& c = 1) {
    Polynomial p(k.size());
    p.add_term(k, c);
    return p;
  }
  static Polynomial variable(std::size_t n, std::size_t i) {
    return monomial(ExponentVector::unit(n, i));
  }

  std::size_t dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const ExponentVector& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ExponentVector& k, const Rational& c) {
    if (k.size() != n_) throw InputError("term dimension does not match polynomial dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::vector<ExponentVector> support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [k, c] : terms_) s.push_back(k);
    return s;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same(a, b);
    Polynomial r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same(a, b);
    Polynomial r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Polynomial r(p.n_);
    if (s == 0) return r;
    for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, s * c);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(n_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Rational constant_term() const { return coefficient(ExponentVector(n_)); }

  // Canonical text: graded-lex order, variables x1..xn.
  std::string str() const;

 private:
  static void require_same(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw InputError("polynomials of different dimension");
  }

  std::size_t n_;
  TermMap terms_;
};

inline std::string monomial_string(const ExponentVector& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (k[i] > 1) s += '^' + std::to_string(k[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k.is_zero()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += monomial_string(k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing.
//
//   poly     := [sign] term { sign term }
//   term     := rational [ '*' ] factor { '*' factor } | rational | factor { '*' factor }
//   factor   := var [ '^' positive-integer ]
//   var      := 'x' digits | 'x' | 'y' | 'z' | 'u' | 'v'
//   rational := digits [ '/' digits ]

namespace detail {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : s_(text) {}

  struct RawTerm {
    Rational coefficient;
    std::map<std::size_t, int> powers;  // 0-based variable -> exponent
  };

  std::vector<RawTerm> parse_terms() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    while (true) {
      RawTerm t = parse_term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      negative = c == '-';
      ++pos_;
      skip_ws();
    }
    return terms;
  }

  std::size_t max_index_seen() const { return max_index_; }
  bool used_alias() const { return used_alias_; }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  bool at_variable() const {
    if (at_end()) return false;
    char c = peek();
    return c == 'x' || c == 'y' || c == 'z' || c == 'u' || c == 'v';
  }

  RawTerm parse_term() {
    RawTerm t{Rational(1), {}};
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = parse_digits();
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        den = parse_digits();
        if (den == 0) fail("zero denominator");
      }
      t.coefficient = ratio(num, den);
      have_coefficient = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (!at_variable()) fail("expected variable after '*'");
      }
    }
    if (!at_variable()) {
      if (!have_coefficient) fail(at_end() ? "unexpected end of input" : "expected term");
      return t;
    }
    parse_factor(t);
    while (true) {
      std::size_t save = pos_;
      skip_ws();
      if (at_end() || peek() != '*') {
        pos_ = save;
        break;
      }
      ++pos_;
      skip_ws();
      if (!at_variable()) fail("expected variable after '*'");
      parse_factor(t);
    }
    return t;
  }

  void parse_factor(RawTerm& t) {
    char c = peek();
    ++pos_;
    std::size_t index = 0;  // 1-based
    if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer k = parse_digits();
      if (k < 1) fail("variable index must be >= 1");
      if (k > 64) fail("variable index too large");
      index = static_cast<std::size_t>(k);
    } else {
      static constexpr std::string_view aliases = "xyzuv";
      index = aliases.find(c) + 1;
      used_alias_ = true;
      if (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
        fail(std::string("unknown variable starting with '") + c + "'");
    }
    max_index_ = std::max(max_index_, index);
    int e = 1;
    std::size_t save = pos_;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '-') fail("negative exponent");
      Integer v = parse_digits();
      if (v == 0) fail("exponent must be positive");
      if (v > 100000) fail("exponent too large");
      e = static_cast<int>(v);
    } else {
      pos_ = save;
    }
    t.powers[index - 1] += e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
  bool used_alias_ = false;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text,
                                   std::optional<std::size_t> dimension = std::nullopt) {
  detail::PolynomialParser parser(text);
  auto raw = parser.parse_terms();
  std::size_t n = dimension.value_or(std::max<std::size_t>(1, parser.max_index_seen()));
  if (n == 0) throw InputError("dimension must be >= 1");
  if (parser.max_index_seen() > n)
    throw InputError("variable index " + std::to_string(parser.max_index_seen()) +
                     " exceeds declared dimension " + std::to_string(n));
  if (parser.used_alias() && n > 5)
    throw InputError("aliases x,y,z,u,v are only valid for dimension <= 5");
  Polynomial p(n);
  for (const auto& t : raw) {
    ExponentVector k(n);
    for (const auto& [i, e] : t.powers) k.set(i, e);
    p.add_term(k, t.coefficient);
  }
  return p;
}

// ---------------------------------------------------------------------------

inline std::set<ExponentVector> support(const Polynomial& p) {
  auto s = p.support();
  return {s.begin(), s.end()};
}

inline Polynomial partial_derivative(const Polynomial& p, std::size_t axis) {
  if (axis >= p.dimension()) throw InputError("derivative axis out of range");
  Polynomial d(p.dimension());
  for (const auto& [k, c] : p.terms()) {
    if (k[axis] == 0) continue;
    ExponentVector k2 = k;
    k2.set(axis, k[axis] - 1);
    d.add_term(k2, c * k[axis]);
  }
  return d;
}

inline WeightedDegree weighted_degree(const Polynomial& p, const Weights& w) {
  if (p.dimension() != w.size()) throw InputError("weights and polynomial dimension differ");
  WeightedDegree best;
  for (const auto& [k, c] : p.terms()) {
    auto d = w.dot(k);
    if (!best || d < *best) best = d;
  }
  return best;
}

inline Polynomial principal_part(const Polynomial& p, const Weights& w) {
  if (p.is_zero()) throw InputError("principal part of the zero polynomial");
  auto d = *weighted_degree(p, w);
  Polynomial r(p.dimension());
  for (const auto& [k, c] : p.terms())
    if (w.dot(k) == d) r.add_term(k, c);
  return r;
}

// p(images_1, ..., images_n)
inline Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.dimension())
    throw InputError("substitution needs one image per variable");
  std::size_t m = images.front().dimension();
  for (const auto& img : images)
    if (img.dimension() != m || m != p.dimension())
      throw InputError("substitution images have mismatched dimension");
  std::vector<std::vector<Polynomial>> powers(p.dimension());
  auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(m, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(m);
  for (const auto& [k, c] : p.terms()) {
    Polynomial term = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] > 0) term = term * power_of(i, k[i]);
    out = out + term;
  }
  return out;
}

struct WeightedClassification {
  std::int64_t degree = 0;
  bool is_weighted_homogeneous = false;
  bool is_convenient = false;
};

inline bool is_weighted_homogeneous(const Polynomial& p, const Weights& w) {
  if (p.is_zero()) return false;
  auto d = *weighted_degree(p, w);
  for (const auto& [k, c] : p.terms())
    if (w.dot(k) != d) return false;
  return true;
}

// Some pure power of every variable occurs in the support.
inline bool is_convenient(const Polynomial& p) {
  std::vector<bool> hit(p.dimension(), false);
  for (const auto& [k, c] : p.terms())
    if (auto axis = k.pure_axis()) hit[*axis] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

inline WeightedClassification weighted_classification(const Polynomial& p, const Weights& w) {
  if (p.is_zero()) throw InputError("classification of the zero polynomial");
  if (p.constant_term() != 0) throw InputError("convenience test needs p(0) = 0");
  return {*weighted_degree(p, w), is_weighted_homogeneous(p, w), is_convenient(p)};
}

}  // namespace lojex
