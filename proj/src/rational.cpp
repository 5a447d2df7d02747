#include "casimir/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace casimir {

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(long long v) {
  q_ = mpq_class(mpz_class(std::to_string(v)));
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / q_);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) out *= b;
    b *= b;
    exponent >>= 1u;
  }
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace casimir

std::size_t std::hash<casimir::Rational>::operator()(const casimir::Rational& r) const noexcept {
  const auto& q = r.raw();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9E3779B97F4A7C15ull;
  h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x7F4A7C15u + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(sgn(q) + 1);
  return h;
}
