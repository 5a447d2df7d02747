#pragma once

#include <string>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<int>>;

enum class Family { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string to_string(Family f);

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

std::string to_string(const RootSystemType& t);

/// Cartan data of a (restricted) root system in the basis of simple roots
/// β_1..β_ℓ, where β_i = 2γ_i whenever 2γ_i is itself a restricted root.
///
/// Index convention: cartan[i][j] = 2(β_i, β_j) / (β_j, β_j). With this
/// convention cartan[i][j]·norms[j] == cartan[j][i]·norms[i].
///
/// Normalization: simply-laced, F4 and G2 types have short roots of square
/// norm 2. The B and C families carry norms (1,…,1,2) and (2,…,2,1) so that
/// their rank-two Gram matrices in the fundamental-weight basis are
/// [[2,2],[2,4]] and [[4,2],[2,2]] respectively.
struct CartanData {
  RootSystemType type;
  IntMatrix cartan;
  std::vector<Rational> norms;
  RationalMatrix inverse_cartan;
  /// Per node: the simple root γ_i has 2γ_i as a restricted root (BC only).
  std::vector<bool> doubled;

  int rank() const { return type.rank; }
  /// (β_i, β_j)
  Rational inner(std::size_t i, std::size_t j) const;
};

/// Throws std::invalid_argument for unsupported family/rank combinations.
CartanData cartan_data(const RootSystemType& type);

/// Gram matrix G_ij = (M_i, M_j) of the fundamental restricted weights,
/// G = 2·cartan⁻¹·diag(norms).
RationalMatrix gram_matrix(const CartanData& data);

/// Exact inverse via Gauss-Jordan elimination; throws on singular input.
RationalMatrix inverse(const RationalMatrix& m);

/// Reorder nodes: result node i is input node perm[i].
CartanData permute_nodes(const CartanData& data, const std::vector<int>& perm);

}  // namespace casimir
