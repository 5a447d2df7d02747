#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/symmdata.hpp"

namespace casimir {

struct FactorSpectrum {
  SymmetricSpaceDescriptor factor;
  std::vector<Rational> eigenvalues;  // index m = 0..bound
};

/// Throws std::invalid_argument unless the factor has restricted rank one.
FactorSpectrum factor_spectrum(const SymmetricSpaceDescriptor& factor, std::int64_t bound);

/// Accepts "S2", "CP3", "HP2", "OP2", "FII" and the other rank-one labels.
SymmetricSpaceDescriptor parse_factor(const std::string& text);

using IndexArray = std::vector<std::int64_t>;

/// λ_a for every index array a in [0, bound]^n, in lexicographic order of a.
struct WeightArrayTable {
  std::vector<IndexArray> indices;
  std::vector<std::vector<Rational>> lambda;
};
WeightArrayTable weight_arrays(const std::vector<FactorSpectrum>& factors);

/// Primitive integer normals of the hyperplanes (λ_a - λ_a')^⊥ over a ≠ a'
/// in the box, kept only when the hyperplane meets the open positive orthant
/// (the normal has entries of both signs). Each hyperplane is listed once,
/// with its first nonzero entry negative. Sorted.
std::vector<std::vector<Integer>> collision_hyperplanes(const std::vector<FactorSpectrum>& factors);

struct BetaCollision {
  IndexArray a;
  IndexArray b;
  Rational value;
};

/// All pairs a < b in the box with λ_a·β = λ_b·β, sorted.
std::vector<BetaCollision> beta_collisions(const std::vector<FactorSpectrum>& factors, const std::vector<Rational>& beta);

struct BetaCertificate {
  std::int64_t bound = 0;
  std::vector<Rational> beta;
  std::size_t candidates_tried = 0;
  std::size_t arrays_checked = 0;
  std::size_t hyperplanes = 0;
  bool values_distinct = false;  // exhaustive check of λ_a·β over the box
  bool avoids_hyperplanes = false;
  bool factors_injective = false;

  bool holds() const { return values_distinct && avoids_hyperplanes && factors_injective; }
};

/// First β with entries from 1, 2, 3, 5, 7, … (ordered by the largest index
/// used, then lexicographically) whose values λ_a·β are pairwise distinct on
/// the box. Empty if none is found within max_level.
std::optional<BetaCertificate> generic_beta_certificate(const std::vector<FactorSpectrum>& factors,
                                                        std::size_t max_level = 2000);

}  // namespace casimir
