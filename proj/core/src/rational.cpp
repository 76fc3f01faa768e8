#include "milef/rational.hpp"

#include "milef/errors.hpp"

namespace milef {

Rational rat(long p, long q) { return rat(Integer(p), Integer(q)); }

Rational rat(const Integer& p, const Integer& q) {
  if (q == 0) throw ContractError("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer p(text);
      return Rational(p);
    }
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q <= 0) throw ParseError("rational \"" + text + "\": denominator must be positive");
    Rational r(p, q);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational \"" + text + "\"");
  }
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

const Rational& ExtRational::value() const {
  if (!finite_) throw ContractError("value() on infinite ExtRational");
  return *finite_;
}

bool ExtRational::operator==(const ExtRational& other) const {
  if (is_infinite() || other.is_infinite()) return is_infinite() == other.is_infinite();
  return value() == other.value();
}

std::string to_string(const ExtRational& value) {
  return value.is_infinite() ? "inf" : to_string(value.value());
}

}  // namespace milef
