#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casimir/multipoly.hpp"
#include "casimir/rational.hpp"

namespace casimir {

enum class TypeClass { Real, Complex, Quaternionic };
std::string to_string(TypeClass t);

/// A spherical representation V with its Casimir Δ^V on V^K as a matrix
/// over the metric parameters.
struct RepresentationEntry {
  std::string id;
  TypeClass type = TypeClass::Real;
  std::string dual_id;
  ParametricMatrix casimir;
};

/// A finite truncation of Ĝ_K. Every verdict holds only for these entries;
/// `truncation` says which ones they are.
struct RepresentationFamily {
  std::string name;
  std::vector<std::string> parameters;
  std::vector<RepresentationEntry> entries;
  std::string truncation;
};

/// Throws std::invalid_argument if a dual id is unknown, duality is not
/// symmetric, or the type disagrees with self-duality.
void validate(const RepresentationFamily& family);

using EntryPair = std::pair<std::string, std::string>;

/// Pairs with V ≇ W and V* ≇ W whose char-poly resultant is identically 0.
std::vector<EntryPair> condition_a(const RepresentationFamily& family);
/// Real/complex entries of dimension >= 2 with res(p, p') ≡ 0.
std::vector<std::string> condition_b(const RepresentationFamily& family);
/// Real/quaternionic entries of dimension >= 2 with res(p, p'') ≡ 0.
std::vector<std::string> condition_c(const RepresentationFamily& family);

enum class SimplicityMode { Real, Complex };

struct MetricReport {
  SimplicityMode mode = SimplicityMode::Real;
  std::vector<Rational> point;
  std::string truncation;
  // Real mode
  std::vector<EntryPair> ri1;    // shared eigenvalue, V ≇ W, V* ≇ W
  std::vector<std::string> ri2;  // real/complex entry with a repeated eigenvalue
  std::vector<std::string> ri3;  // quaternionic entry with a multiplicity other than two
  // Complex mode
  std::vector<std::string> ci1;  // repeated eigenvalue
  std::vector<std::string> ci2;  // entry not of real type
  std::vector<EntryPair> ci3;    // shared eigenvalue, V ≇ W

  bool holds() const;
};

/// Throws std::invalid_argument for a non-positive coordinate or a point of
/// the wrong length.
MetricReport evaluate_at_metric(const RepresentationFamily& family, const std::vector<Rational>& point,
                                SimplicityMode mode = SimplicityMode::Real);

/// V_k for k = 0..kmax with V_k^F ≠ 0, parameters (a, b).
RepresentationFamily su2f_family(int kmax);
/// (p, q) with p + q <= bound on the Hopf total space, parameters (gamma1, gamma2).
RepresentationFamily hopf_family(int n, int bound);

}  // namespace casimir
