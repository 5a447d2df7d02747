#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace casimir {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Serializes as "num/den", or "num" when den == 1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                     // NOLINT(implicit)
  Rational(int v) : q_(static_cast<long>(v)) {}   // NOLINT(implicit)
  Rational(long long v);                          // NOLINT(implicit)
  Rational(const Integer& v) : q_(v) {}           // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Smallest integer >= this.
  Integer ceil() const;
  Integer floor() const;

  Rational abs() const;
  Rational inverse() const;

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class q);
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exponent);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace casimir

template <>
struct std::hash<casimir::Rational> {
  std::size_t operator()(const casimir::Rational& r) const noexcept;
};
