#include "casimir/rank2.hpp"

#include <stdexcept>

namespace casimir {

namespace {

struct Term {
  std::uint32_t x, y, r;
  long coeff;
};

MultiPoly poly(bool with_r, std::initializer_list<Term> terms) {
  std::vector<std::string> vars{"x", "y"};
  if (with_r) vars.push_back("r");
  MultiPoly p(vars);
  for (const auto& t : terms) {
    Exponents e{t.x, t.y};
    if (with_r) e.push_back(t.r);
    p.add_term(e, Rational(t.coeff));
  }
  return p;
}

WeightPair wp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {DominantWeight{a, b}, DominantWeight{c, d}};
}

std::function<std::vector<WeightPair>(int)> fixed(WeightPair p) {
  return [p](int) { return std::vector<WeightPair>{p}; };
}

const auto never = [](int) { return false; };

// First non-dual collision in a small box.
std::vector<WeightPair> searched_pair(SpaceLabel label, int r) {
  const auto datum = restricted_datum(label, {r, 2});
  for (std::int64_t bound = 4; bound <= 64; bound *= 2) {
    const auto hits = enumerate_collisions(datum, bound, true);
    if (!hits.empty()) return {{hits.front().weight_a, hits.front().weight_b}};
  }
  throw std::runtime_error("no collision found for " + to_string(label));
}

}  // namespace

SpaceParams Rank2Case::params(int r) const {
  SpaceParams p;
  if (uses_rank_parameter(label)) p.rank = 2;
  if (parametric()) p.r = r;
  return p;
}

std::vector<Rank2Case> rank2_catalog() {
  using L = SpaceLabel;
  const RootSystemType b2{Family::B, 2};
  const RootSystemType c2{Family::C, 2};
  std::vector<Rank2Case> out;

  out.push_back({L::AIII_1, c2,
                 poly(true, {{1, 0, 1, 2}, {2, 0, 0, 4}, {0, 1, 1, 2}, {1, 1, 0, 4}, {0, 2, 0, 2}, {1, 0, 0, 4}}), 4,
                 [](int r) {
                   if (r % 2 == 0) {
                     const int l = r / 2;
                     return std::vector<WeightPair>{wp(l + 3, 0, l - 1, 6)};
                   }
                   const int l = (r + 1) / 2;
                   return std::vector<WeightPair>{wp(l, 0, l - 2, 3)};
                 },
                 never});
  out.push_back({L::AIII_2, c2, poly(false, {{2, 0, 0, 4}, {1, 1, 0, 4}, {0, 2, 0, 2}, {1, 0, 0, 10}, {0, 1, 0, 6}}), 0,
                 fixed(wp(0, 3, 2, 0)), never});
  out.push_back({L::BI, b2,
                 poly(true, {{1, 0, 1, 4}, {2, 0, 0, 2}, {0, 1, 1, 8}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, -4}, {0, 1, 0, -10}}),
                 2,
                 [](int r) {
                   if (r == 2) return searched_pair(L::BI, r);
                   return std::vector<WeightPair>{wp(r + 3, 0, r - 3, 4)};
                 },
                 [](int r) { return r == 2; }});
  out.push_back({L::CII_1, b2,
                 poly(true, {{1, 0, 1, 4}, {2, 0, 0, 2}, {0, 1, 1, 8}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, -2}, {0, 1, 0, -12}}),
                 5,
                 [](int r) {
                   if (r == 5) return std::vector<WeightPair>{wp(3, 0, 0, 2)};
                   return std::vector<WeightPair>{wp(r + 3, 0, r - 6, 6)};
                 },
                 never});
  out.push_back({L::CII_2, b2, poly(false, {{2, 0, 0, 2}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, 14}, {0, 1, 0, 20}}), 0,
                 fixed(wp(0, 3, 3, 1)), never});
  out.push_back({L::DI_1, b2, poly(false, {{2, 0, 0, 2}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, 6}, {0, 1, 0, 10}}), 0,
                 fixed(wp(0, 2, 3, 0)), never});
  out.push_back({L::DI_2, b2,
                 poly(true, {{1, 0, 1, 4}, {2, 0, 0, 2}, {0, 1, 1, 8}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, -6}, {0, 1, 0, -14}}),
                 4, [](int r) { return std::vector<WeightPair>{wp(r, 0, r - 3, 2)}; }, never});
  out.push_back({L::DIII_1, b2, poly(false, {{2, 0, 0, 2}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, 10}, {0, 1, 0, 12}}), 0,
                 fixed(wp(1, 5, 4, 3)), never});
  // 2(2x + y + 11)x + 2(x + y + 7)y, expanded.
  out.push_back({L::DIII_2, c2, poly(false, {{2, 0, 0, 4}, {1, 1, 0, 4}, {0, 2, 0, 2}, {1, 0, 0, 22}, {0, 1, 0, 14}}), 0,
                 fixed(wp(0, 3, 2, 0)), never});
  out.push_back({L::EIII, b2, poly(false, {{2, 0, 0, 2}, {1, 1, 0, 4}, {0, 2, 0, 4}, {1, 0, 0, 22}, {0, 1, 0, 34}}), 0,
                 fixed(wp(1, 3, 4, 1)), never});
  return out;
}

Rank2Check check_rank2_case(const Rank2Case& c, int r) {
  if (c.parametric() && r < c.r_min) throw std::invalid_argument(to_string(c.label) + ": r below range");
  Rank2Check out;
  out.r = c.parametric() ? r : 0;
  const auto datum = restricted_datum(c.label, c.params(r));
  out.polynomial_matches = datum.descriptor.restricted_type == c.restricted_type &&
                           polynomial_form(datum, true) == c.published_polynomial;
  const auto form = eigenvalue_form(datum);
  out.pairs_collide = true;
  for (const auto& [a, b] : c.pairs(r)) {
    const Rational ea = eigenvalue(form, a);
    const Rational eb = eigenvalue(form, b);
    const bool ok = ea == eb && a != b;
    out.pairs_collide = out.pairs_collide && ok;
    out.pairs.push_back({a, b, ea, dual_weight(datum, a) == b});
  }
  if (out.pairs.empty()) out.pairs_collide = false;
  return out;
}

}  // namespace casimir
