#pragma once

// Exact scalar types shared by every lojex module.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lojex {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Error taxonomy. The CLI maps each family to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (dimension mismatch, syntax, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// An input hypothesis is not met; the caller may still get partial output.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A hard cap (S-pair budget, search horizon, integer width) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// mpq_rational's two-argument constructor does not canonicalize.
inline Rational ratio(const Integer& num, const Integer& den) { return Rational(num) / Rational(den); }

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

inline Integer floor_of(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline Integer ceil_of(const Rational& q) { return -floor_of(-q); }

// A nonnegative-or-any rational extended by +infinity.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational v) : value_(std::move(v)) {}  // NOLINT(implicit)
  ExtRational(std::int64_t v) : value_(Rational(v)) {}  // NOLINT(implicit)

  static ExtRational infinity() {
    ExtRational r;
    r.value_.reset();
    return r;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rational& value() const {
    if (!value_) throw std::logic_error("ExtRational: value of infinity");
    return *value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return is_infinite() ? "infinity" : to_string(*value_); }

 private:
  std::optional<Rational> value_ = Rational(0);
};

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b = 1;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace lojex
