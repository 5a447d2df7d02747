#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/rootsys.hpp"

namespace casimir {

/// Cartan labels of irreducible compact symmetric spaces. Sub-cases follow
/// the row order of Helgason's Table VI (the "(1)/(2)/(3)" suffixes):
///   AIII(1)  SU(p+q)/S(U(p)×U(q)), p < q     restricted BC_p
///   AIII(2)  SU(2p)/S(U(p)×U(p))             restricted C_p
///   CII(1)   Sp(p+q)/Sp(p)×Sp(q), p < q       restricted BC_p
///   CII(2)   Sp(2p)/Sp(p)×Sp(p)               restricted C_p
///   DI(1)    SO(2p+2)/SO(p)×SO(p+2)           restricted B_p
///   DI(2)    SO(2r)/SO(p)×SO(2r-p), p ≤ r-2   restricted B_p
///   DI(3)    SO(2p)/SO(p)×SO(p)               restricted D_p
///   DIII(1)  SO(4p)/U(2p)                     restricted C_p
///   DIII(2)  SO(4p+2)/U(2p+1)                 restricted BC_p
/// r is the rank of G wherever a range parameter appears (AIII(1): r+1 = p+q,
/// BI: 2r+1 = p+q, CII(1): r = p+q, DI(2): 2r = p+q).
///
/// Sphere, CP, HP and OP2 are the compact rank-one spaces S^n, CP^n, HP^n and
/// the Cayley plane (= FII), parameterized by n through `r`.
enum class SpaceLabel {
  AI, AII, AIII_1, AIII_2, BI, CI, CII_1, CII_2, DI_1, DI_2, DI_3, DIII_1, DIII_2,
  EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX, FI, FII, G,
  Sphere, CP, HP, OP2
};

std::string to_string(SpaceLabel label);

/// Accepts "AIII(1)", "AIII1", "AIII_1", and CROSS names with an embedded
/// dimension ("S2", "CP3", "HP2", "OP2"); the embedded integer is returned.
struct ParsedLabel {
  SpaceLabel label;
  std::optional<int> embedded;
};
ParsedLabel parse_label(const std::string& text);

bool uses_range_parameter(SpaceLabel label);
bool uses_rank_parameter(SpaceLabel label);

struct SpaceParams {
  std::optional<int> r;
  std::optional<int> rank;
};

/// (m_γ, m_2γ) for one simple restricted root.
struct RootMultiplicity {
  int simple = 1;
  int doubled = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct SymmetricSpaceDescriptor {
  SpaceLabel label = SpaceLabel::AI;
  int r = 0;     // 0 when the label has no range parameter
  int rank = 1;  // restricted rank ℓ
  /// Root system providing the Gram matrix, and the map from catalog node i
  /// to that system's node node_order[i].
  RootSystemType restricted_type;
  std::vector<int> node_order;
  std::vector<RootMultiplicity> multiplicities;
  /// Canonical involution σ in catalog node order: dual of Σ m_k M_k is
  /// Σ m_{σ(k)} M_k.
  std::vector<int> involution;
};

struct RestrictedDatum {
  SymmetricSpaceDescriptor descriptor;
  CartanData cartan;  // in catalog node order
  RationalMatrix gram;
  std::vector<Rational> two_delta_bar;

  int rank() const { return descriptor.rank; }
};

/// Throws std::invalid_argument when parameters are missing or out of range.
SymmetricSpaceDescriptor describe(SpaceLabel label, const SpaceParams& params);

/// Builds the datum and checks its 2δ̄ against the stored 2δ̄ table row;
/// a mismatch is a std::logic_error.
RestrictedDatum restricted_datum(SpaceLabel label, const SpaceParams& params);
RestrictedDatum restricted_datum(const SymmetricSpaceDescriptor& descriptor);

/// k_i with δ̄ = Σ k_i M_i: m_γ/2 if m_2γ = 0, else (m_γ + 2m_2γ)/4.
std::vector<Rational> delta_bar_coeffs(const std::vector<RootMultiplicity>& multiplicities);

std::vector<int> dual_permutation(const SymmetricSpaceDescriptor& descriptor);

/// One entry of a stored 2δ̄ row, affine in the range parameter: constant + slope·r.
struct AffineEntry {
  Rational constant;
  Rational slope;
};

/// The stored 2δ̄ row for a label at the given restricted rank.
std::vector<AffineEntry> two_delta_bar_row(SpaceLabel label, int rank);
std::vector<Rational> two_delta_bar_values(SpaceLabel label, const SpaceParams& params);

/// Representative (label, parameters) for every row of the 2δ̄ table,
/// including both regimes of the sub-cased labels.
std::vector<std::pair<SpaceLabel, SpaceParams>> representative_rows();

/// Rank-one data used as CROSS factors, across a spread of dimensions.
std::vector<SymmetricSpaceDescriptor> rank_one_catalog();

std::string describe_params(const SymmetricSpaceDescriptor& d);

}  // namespace casimir
