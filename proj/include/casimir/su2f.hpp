#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

/// Element of Q(ζ) for ζ = e^{2πi/12}, stored as c0 + c1ζ + c2ζ² + c3ζ³
/// modulo the cyclotomic polynomial ζ⁴ - ζ² + 1.
class Cyclo12 {
 public:
  Cyclo12() = default;
  explicit Cyclo12(const Rational& c) { c_[0] = c; }
  /// ζ^e for any integer e.
  static Cyclo12 root(long e);

  const std::array<Rational, 4>& coefficients() const { return c_; }
  bool is_zero() const;
  Cyclo12 inverse() const;
  std::string str() const;

  Cyclo12& operator+=(const Cyclo12& o);
  Cyclo12& operator-=(const Cyclo12& o);
  friend Cyclo12 operator+(Cyclo12 a, const Cyclo12& b) { return a += b; }
  friend Cyclo12 operator-(Cyclo12 a, const Cyclo12& b) { return a -= b; }
  friend Cyclo12 operator*(const Cyclo12& a, const Cyclo12& b);
  friend bool operator==(const Cyclo12&, const Cyclo12&) = default;

 private:
  std::array<Rational, 4> c_{};
};

/// 2×2 monomial matrix: diag(ζ^e1, ζ^e2) or antidiag with ζ^e1 in row 0 and
/// ζ^e2 in row 1. Exponents are reduced mod 12.
struct MonomialMatrix {
  bool swap = false;
  int e1 = 0;
  int e2 = 0;

  static MonomialMatrix identity() { return {}; }
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
  friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// σ = diag(e^{iπ/3}, e^{-iπ/3}) and τ = [[0, i], [i, 0]].
MonomialMatrix sigma_generator();
MonomialMatrix tau_generator();

/// Closure of the generators under multiplication, sorted.
std::vector<MonomialMatrix> generate_group(const std::vector<MonomialMatrix>& generators);

/// Action on v_ℓ = z₁^ℓ z₂^{k-ℓ} by linear substitution: g·v_ℓ = ζ^phase v_target.
struct MonomialImage {
  int target;
  int phase;
};
MonomialImage act(const MonomialMatrix& g, int k, int ell);

using CycloVector = std::map<int, Cyclo12>;  // sparse, indexed by ℓ

struct FixedSpaceBasis {
  int k = 0;
  std::size_t group_order = 0;
  /// Each vector is normalized so its lowest-index coefficient is 1.
  std::vector<CycloVector> basis;
  /// Sorted distinct |2ℓ - k| over the supports of the basis vectors.
  std::vector<int> ell_values;
  /// |2ℓ - k| per basis vector (constant on each support).
  std::vector<int> basis_d;

  std::size_t dimension() const { return basis.size(); }
};

/// V_k^F by averaging g·v_ℓ over the closed group and taking the rank of
/// the images. Throws std::logic_error if the closure does not have order 12
/// or a basis vector is not fixed by both generators.
FixedSpaceBasis fixed_space(int k);

/// Dimension predicted from the generators alone: orbits {ℓ, k-ℓ} with
/// 2ℓ ≡ k (mod 6), the middle ℓ = k/2 counting only when i^k = 1; zero for odd k.
std::size_t predicted_dimension(int k);

/// λ_{k,ℓ} as coefficients of (a, b): (-d²/8, k(k+2)/8 + d²/8), d = |2ℓ - k|.
struct TwoParamEigenvalue {
  int k = 0;
  int d = 0;
  Rational a_coeff;
  Rational b_coeff;

  Rational at(const Rational& a, const Rational& b) const { return a_coeff * a + b_coeff * b; }
  bool same_form(const TwoParamEigenvalue& o) const { return a_coeff == o.a_coeff && b_coeff == o.b_coeff; }
};

TwoParamEigenvalue two_param_eigenvalue(int k, int d);

/// One form per distinct d among the basis vectors. Throws
/// std::invalid_argument when V_k^F = 0.
std::vector<TwoParamEigenvalue> eigenvalue_forms(int k);

struct FormCollision {
  TwoParamEigenvalue first;
  TwoParamEigenvalue second;
  Rational value;
};

struct Su2fCertificate {
  int kmax = 0;
  std::vector<std::size_t> dimensions;  // index k = 0..kmax
  std::vector<TwoParamEigenvalue> forms;
  bool oracle_agrees = false;
  bool odd_k_vanish = false;
  bool within_k_distinct = false;  // RI 2
  bool cross_k_injective = false;  // distinct (k, d) give distinct forms
  std::optional<std::pair<Rational, Rational>> metric;
  std::vector<FormCollision> metric_collisions;

  /// RI 3 concerns quaternionic entries only; every V_k with V_k^F ≠ 0 has
  /// k even and is of real type, so the check is vacuous.
  static constexpr bool ri3_vacuous = true;

  bool holds() const {
    return oracle_agrees && odd_k_vanish && within_k_distinct && cross_k_injective && metric_collisions.empty();
  }
};

/// Forms at (a, b) with equal value but distinct (k, d).
std::vector<FormCollision> collisions_at(const std::vector<TwoParamEigenvalue>& forms, const Rational& a,
                                         const Rational& b);

Su2fCertificate simplicity_certificate(int kmax, std::optional<std::pair<Rational, Rational>> metric = std::nullopt);

/// First (a, b) with a ≠ b and no collision among forms with k <= kmax,
/// taking entries from 1, 2, 3, 5, 7, … in order of the larger index, then
/// lexicographically. Empty if nothing is found within max_level.
std::optional<std::pair<Rational, Rational>> search_metric(int kmax, std::size_t max_level = 200);

}  // namespace casimir
