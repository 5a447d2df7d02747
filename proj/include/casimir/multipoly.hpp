#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate polynomial with rational coefficients over an ordered list of
/// named parameters. Terms are kept in a std::map keyed by exponent vectors,
/// so equal polynomials have identical representations. Zero coefficients
/// are never stored.
///
/// A polynomial with an empty variable list is a constant and combines with
/// a polynomial over any variable list.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly constant(const Rational& c) { return constant({}, c); }
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  /// Σ coeffs[i]·variables[i] + offset.
  static MultiPoly linear(std::vector<std::string> variables, std::span<const Rational> coeffs,
                          const Rational& offset = Rational(0));

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(const std::string& name) const;

  void add_term(const Exponents& exps, const Rational& coeff);

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitute a value for one variable; the variable is kept in the list.
  MultiPoly substitute(const std::string& name, const Rational& value) const;
  /// Re-express over a larger variable list that contains all current ones.
  MultiPoly extend_to(const std::vector<std::string>& variables) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Human-readable form, e.g. "2*x^2 + 4*x*y - 3/2".
  std::string str() const;

 private:
  void unify_with(MultiPoly& other);

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Matrix with polynomial entries, row-major. Casimir matrices are square;
/// the shape is kept so that char_poly can reject anything else.
struct ParametricMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MultiPoly> entries;

  ParametricMatrix() = default;
  ParametricMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> values);
  static ParametricMatrix diagonal(const std::vector<MultiPoly>& diag);

  bool is_square() const { return rows == cols; }
  std::size_t dim() const { return rows; }
  const MultiPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  MultiPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

}  // namespace casimir
