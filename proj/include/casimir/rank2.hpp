#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/multipoly.hpp"
#include "casimir/spectrum.hpp"
#include "casimir/symmdata.hpp"

namespace casimir {

using WeightPair = std::pair<DominantWeight, DominantWeight>;

/// One rank-two space whose 2δ̄ is not proportional to M_1 + M_2, with its
/// eigenvalue polynomial as published and the published colliding weights.
struct Rank2Case {
  SpaceLabel label;
  RootSystemType restricted_type;
  /// Over (x, y) or (x, y, r).
  MultiPoly published_polynomial;
  /// Smallest admissible r; 0 for labels without a range parameter.
  int r_min = 0;
  /// Colliding pairs at a given r (ignored when the label has no r).
  std::function<std::vector<WeightPair>(int r)> pairs;
  /// True for r values where the pair is not given in closed form and is
  /// taken from enumerate_collisions instead.
  std::function<bool(int r)> pair_from_search;

  bool parametric() const { return r_min > 0; }
  SpaceParams params(int r) const;
};

std::vector<Rank2Case> rank2_catalog();

struct Rank2Check {
  int r = 0;
  bool polynomial_matches = false;
  std::vector<CollisionReport> pairs;  // with eigenvalues from the datum
  bool pairs_collide = false;
};

/// Compares polynomial_form against the published polynomial and evaluates
/// every listed pair at range parameter r.
Rank2Check check_rank2_case(const Rank2Case& c, int r);

}  // namespace casimir
