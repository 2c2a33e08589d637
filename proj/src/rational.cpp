#include "gdifs/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "gdifs/error.hpp"

namespace gdifs {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

double log_mpz(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  const std::string_view num = trim(t.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : trim(t.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorCode::InvalidInput, "not a rational \"p/q\": '" + std::string(text) + "'");
  const mpz_class d = parse_integer(den);
  if (d == 0) fail(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "non-finite double");
  return Rational(mpq_class(value));
}

double Rational::log() const {
  if (sign() <= 0) fail(ErrorCode::NonPositive, "log of non-positive rational " + str());
  return log_mpz(v_.get_num()) - log_mpz(v_.get_den());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace gdifs
