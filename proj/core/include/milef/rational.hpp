#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace milef {

// Exact arbitrary-precision rationals are the only scalar type in the core.
// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// under arithmetic, which is exactly the invariant this library needs.
using Rational = mpq_class;
using Integer = mpz_class;

/// Build a rational from an integer pair, canonicalizing. q must be nonzero.
Rational rat(long p, long q);
Rational rat(const Integer& p, const Integer& q);

/// Parse "p", "-p" or "p/q" with q > 0. Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Largest integer <= value, and smallest integer >= value.
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// A rational extended with a single +infinity element. Used by metrics
/// that are genuinely infinite on degenerate pairs; never a sentinel number.
class ExtRational {
 public:
  ExtRational() : finite_(0) {}
  explicit ExtRational(Rational value) : finite_(std::move(value)) {}
  static ExtRational infinity() {
    ExtRational r;
    r.finite_.reset();
    return r;
  }

  bool is_infinite() const { return !finite_.has_value(); }
  const Rational& value() const;

  bool operator==(const ExtRational& other) const;
  bool operator<=(const Rational& bound) const {
    return !is_infinite() && value() <= bound;
  }

 private:
  std::optional<Rational> finite_;
};

std::string to_string(const ExtRational& value);

}  // namespace milef
