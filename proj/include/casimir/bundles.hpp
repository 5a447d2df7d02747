#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

/// Spherical weight p·π_1 + q·π_n of SU(n+1) on the Hopf total space.
struct HopfWeight {
  std::int64_t p = 0;
  std::int64_t q = 0;
  friend bool operator==(const HopfWeight&, const HopfWeight&) = default;
  friend auto operator<=>(const HopfWeight&, const HopfWeight&) = default;
};

/// α_λ (the H_0² eigenvalue) and the Freudenthal value (λ + 2δ, λ).
struct BundleEigenvalue {
  Rational alpha;
  Rational freudenthal;
  HopfWeight weight;
};

/// Eigenvalue of -Δ on the fixed line as an affine form in the metric
/// parameters: gamma1·γ₁ + gamma2·γ₂ = (γ₁ - γ₂)α + γ₂(λ + 2δ, λ).
struct ParametricEigenvalue {
  Rational gamma1;
  Rational gamma2;
  friend bool operator==(const ParametricEigenvalue&, const ParametricEigenvalue&) = default;
};

struct HopfInvariantPair {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// Throws std::invalid_argument for n < 1 or negative p, q.
BundleEigenvalue hopf_eigenvalue(int n, std::int64_t p, std::int64_t q);
ParametricEigenvalue parametric_eigenvalue(const BundleEigenvalue& e);
HopfInvariantPair hopf_invariants(int n, std::int64_t p, std::int64_t q);

/// Both equations of the collision system, evaluated directly.
bool collision_system_direct(int n, HopfWeight a, HopfWeight b);
/// The same system through x² + y² and xy.
bool collision_system_check(int n, HopfWeight a, HopfWeight b);

struct HopfCollision {
  HopfWeight a;
  HopfWeight b;
  bool swap = false;  // b == (a.q, a.p); such pairs are dual representations
};

struct HopfScanReport {
  int n = 0;
  std::int64_t bound = 0;
  std::uint64_t ordered_pairs_checked = 0;
  /// Ordered pairs where the direct and the reduced system disagree.
  std::uint64_t disagreements = 0;
  /// Weights whose {x, y} could not be recovered from (x² + y², xy).
  std::uint64_t recovery_failures = 0;
  /// Unordered collisions with a < b.
  std::vector<HopfCollision> collisions;
  std::size_t swap_collisions = 0;
  std::vector<HopfCollision> non_swap;

  bool holds() const { return non_swap.empty() && disagreements == 0 && recovery_failures == 0; }
};

/// Exhaustive scan of 0 <= p, q, p', q' <= bound, sharded by p.
/// Throws std::invalid_argument for n < 2 or bound < 1.
HopfScanReport hopf_swap_theorem_scan(int n, std::int64_t bound);

/// Circle bundles over Hermitian symmetric spaces and whether the base is
/// G-simple (only rank-one bases are).
struct BundleCase {
  std::string name;
  std::string total_space;
  std::string base;
  std::string base_label;
  int m = 0;  // B1 only
  int n = 0;  // B1 and B2
  int base_rank = 0;
  bool base_simple = false;
  std::string note;
};

/// B1: SU(n+m)/SU(m)×SU(n) over AIII; B2: SO(2n)/SU(n) over DIII (n odd);
/// B3: E6/D5 over EIII. Base ranks come from the symmetric-space catalog.
/// Throws std::invalid_argument on an unknown name or invalid sizes.
BundleCase bundle_case(const std::string& name, int m = 0, int n = 0);
std::vector<BundleCase> bundle_case_notes();

}  // namespace casimir
