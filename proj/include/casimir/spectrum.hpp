#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "casimir/multipoly.hpp"
#include "casimir/rational.hpp"
#include "casimir/symmdata.hpp"

namespace casimir {

/// Σ n_i M_i with non-negative integer n_i.
struct DominantWeight {
  std::vector<std::int64_t> coeffs;

  DominantWeight() = default;
  DominantWeight(std::initializer_list<std::int64_t> c);
  /// Throws std::invalid_argument on a negative coefficient.
  explicit DominantWeight(std::vector<std::int64_t> c);

  std::size_t size() const { return coeffs.size(); }
  std::string str() const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
};

/// ρ ↦ (ρ + 2δ̄, ρ) = ρᵀGρ + shiftᵀGρ in the M-basis.
struct EigenvalueForm {
  RationalMatrix gram;
  std::vector<Rational> shift;

  std::size_t rank() const { return shift.size(); }
};

EigenvalueForm eigenvalue_form(const RestrictedDatum& datum);

/// Throws std::invalid_argument on a dimension mismatch.
Rational eigenvalue(const EigenvalueForm& form, const DominantWeight& w);
Rational eigenvalue(const EigenvalueForm& form, const std::vector<Rational>& w);

/// (u, v) = uᵀGv for M-basis coordinate vectors.
Rational inner(const RationalMatrix& gram, const std::vector<Rational>& u, const std::vector<Rational>& v);

/// Weight variables: "x","y" in rank two, "x" in rank one, x1..xℓ otherwise.
std::vector<std::string> weight_variables(std::size_t rank);

/// The eigenvalue as a polynomial in the weight coordinates. With
/// symbolic_r set and a label that has a range parameter, the 2δ̄ row is
/// kept affine in an extra trailing variable "r".
MultiPoly polynomial_form(const RestrictedDatum& datum, bool symbolic_r = false);

DominantWeight dual_weight(const RestrictedDatum& datum, const DominantWeight& w);

struct CollisionReport {
  DominantWeight weight_a;
  DominantWeight weight_b;
  Rational eigenvalue;
  bool dual_related = false;
};

/// All unordered pairs of distinct weights in the box [0, bound]^ℓ with equal
/// eigenvalue, sorted lexicographically by (weight_a, weight_b) with
/// weight_a < weight_b. The box is sharded across worker threads.
std::vector<CollisionReport> enumerate_collisions(const RestrictedDatum& datum, std::int64_t bound,
                                                  bool exclude_dual_pairs);

}  // namespace casimir
