#include "np/rational.hpp"

#include <ostream>

#include "np/error.hpp"

namespace np {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::IncomparablePolygons: return "IncomparablePolygons";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DegenerateInput, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DegenerateInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) fail(ErrorKind::Parse, "rational denominator must be positive: " + std::string(text));
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) fail(ErrorKind::Parse, "not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') fail(ErrorKind::Parse, "not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Integer abs(const Integer& x) { return Integer(::abs(x)); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += ::abs(m);
  return r;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) fail(ErrorKind::DegenerateInput, "integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

}  // namespace np
