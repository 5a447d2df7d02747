#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/multipoly.hpp"

namespace casimir {

/// Polynomial in a formal variable t whose coefficients are MultiPoly over
/// the metric parameters. coefficients()[d] is the coefficient of t^d.
/// The zero polynomial has no coefficients and no degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<MultiPoly> coefficients);

  /// t - root
  static UniPoly linear_factor(const MultiPoly& root);

  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const MultiPoly& leading() const;
  MultiPoly coefficient(std::size_t d) const;

  /// All parameter names appearing in the coefficients (first non-empty list).
  std::vector<std::string> variables() const;

  /// Coefficient-wise substitution of the parameter point.
  std::vector<Rational> evaluate_parameters(std::span<const Rational> point) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<MultiPoly> coeffs_;
};

/// Formal derivative in t; order must be 1 or 2.
UniPoly derivative(const UniPoly& p, unsigned order = 1);

/// det(Sylvester(p, q)) with the rows of p first. Throws std::invalid_argument
/// when both inputs are constant in t.
MultiPoly resultant(const UniPoly& p, const UniPoly& q);

/// det(t·Id - m), computed without division (Berkowitz). Throws
/// std::invalid_argument for non-square input.
UniPoly char_poly(const ParametricMatrix& m);

/// Determinant of a square polynomial matrix.
MultiPoly determinant(const ParametricMatrix& m);

/// Univariate polynomial over the rationals, used once the metric parameters
/// have been fixed to a rational point. coefficients[d] multiplies t^d.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const;
  Rational evaluate(const Rational& t) const;

  QPoly derivative() const;
  QPoly monic() const;

  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) is the zero polynomial.
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace casimir
