#pragma once

#include <optional>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/spectrum.hpp"
#include "casimir/symmdata.hpp"

namespace casimir {

/// Data behind a reflection witness: α = s(β_i - β_j) written in the M-basis
/// with primitive integer coordinates, the chosen m_k, the multiplier N and
/// the checks performed on the result.
struct ReflectionCertificate {
  std::size_t index_i = 0;
  std::size_t index_j = 0;
  std::vector<Integer> alpha;
  Rational alpha_norm;  // (α, α)
  /// Lower bounds 2(α, M_i)a_k/(α, α) before rounding; zero at i and j.
  std::vector<Rational> m_lower_bounds;
  std::vector<std::int64_t> m;  // m_i = 1, m_j = 0
  Integer multiplier;           // N
  std::size_t duality_retries = 0;
  Rational alpha_dot_delta;     // (α, δ̄), must be 0
  bool fixes_delta = false;
  bool both_dominant = false;
  bool distinct = false;
  bool non_dual = false;
  bool equal_eigenvalues = false;

  bool valid() const { return fixes_delta && both_dominant && distinct && non_dual && equal_eigenvalues; }
};

struct ReflectionWitness {
  CollisionReport report;
  ReflectionCertificate certificate;
};

/// First index pair (i < j, lexicographic) with equal 2δ̄ coefficient and
/// equal square norm; empty if none exists.
std::optional<std::pair<std::size_t, std::size_t>> witness_indices(const RestrictedDatum& datum);

/// R_α applied to an M-basis coordinate vector.
std::vector<Rational> reflect(const RationalMatrix& gram, const std::vector<Rational>& alpha,
                              const std::vector<Rational>& v);

/// Throws std::domain_error when the rank is below 3, when no admissible
/// index pair exists, or when duality cannot be broken within the retry cap.
ReflectionWitness reflection_witness(const RestrictedDatum& datum);

}  // namespace casimir
