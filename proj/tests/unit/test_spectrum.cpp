#include <algorithm>
#include <cstdlib>
#include <map>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

#include "casimir/spectrum.hpp"

using namespace casimir;
using L = SpaceLabel;

namespace {

RestrictedDatum aiii2() { return restricted_datum(L::AIII_2, {std::nullopt, 2}); }
RestrictedDatum ai(int rank) { return restricted_datum(L::AI, {std::nullopt, rank}); }

bool contains(const std::vector<CollisionReport>& v, const DominantWeight& a, const DominantWeight& b) {
  return std::any_of(v.begin(), v.end(), [&](const CollisionReport& c) { return c.weight_a == a && c.weight_b == b; });
}

std::vector<DominantWeight> box(std::size_t rank, std::int64_t bound) {
  std::vector<DominantWeight> out;
  std::vector<std::int64_t> c(rank, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t k = rank;
    while (k > 0 && c[k - 1] == bound) c[--k] = 0;
    if (k == 0) break;
    ++c[k - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("eigenvalue examples") {
  const auto form = eigenvalue_form(aiii2());
  CHECK(eigenvalue(form, DominantWeight{2, 0}) == Rational(36));
  CHECK(eigenvalue(form, DominantWeight{0, 3}) == Rational(36));
  for (const auto& [label, p] : representative_rows()) {
    const auto d = restricted_datum(label, p);
    CHECK(eigenvalue(eigenvalue_form(d), DominantWeight(std::vector<std::int64_t>(d.two_delta_bar.size(), 0))) ==
          Rational(0));
  }
  CHECK_THROWS_AS(eigenvalue(form, DominantWeight{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DominantWeight(std::vector<std::int64_t>{1, -1}), std::invalid_argument);
}

TEST_CASE("polynomial forms") {
  // BI: 4rx + 2x² + 8ry + 4xy + 4y² - 4x - 10y
  const auto bi = polynomial_form(restricted_datum(L::BI, {5, 2}), true);
  CHECK(bi.variables() == std::vector<std::string>{"x", "y", "r"});
  for (long r = 2; r <= 9; ++r)
    for (long x = 0; x <= 4; ++x)
      for (long y = 0; y <= 4; ++y) {
        const std::vector<Rational> pt{x, y, r};
        CHECK(bi.evaluate(pt) == Rational(4 * r * x + 2 * x * x + 8 * r * y + 4 * x * y + 4 * y * y - 4 * x - 10 * y));
      }
  // DIII(2): 2(2x + y + 11)x + 2(x + y + 7)y
  const auto d3 = polynomial_form(restricted_datum(L::DIII_2, {std::nullopt, 2}));
  for (long x = 0; x <= 6; ++x)
    for (long y = 0; y <= 6; ++y) {
      const std::vector<Rational> pt{x, y};
      CHECK(d3.evaluate(pt) == Rational(2 * (2 * x + y + 11) * x + 2 * (x + y + 7) * y));
    }
  // AI rank 3
  MultiPoly expected({"x1", "x2", "x3"});
  const std::vector<std::pair<Exponents, long>> terms{{{2, 0, 0}, 3}, {{0, 2, 0}, 4}, {{0, 0, 2}, 3},
                                                      {{1, 1, 0}, 4}, {{1, 0, 1}, 2}, {{0, 1, 1}, 4},
                                                      {{1, 0, 0}, 6}, {{0, 1, 0}, 8}, {{0, 0, 1}, 6}};
  for (const auto& [e, c] : terms) expected.add_term(e, Rational(c));
  CHECK(polynomial_form(ai(3)) == expected);
  CHECK(weight_variables(1) == std::vector<std::string>{"x"});
  CHECK(weight_variables(4).back() == "x4");
}

TEST_CASE("property: polynomial form agrees with the eigenvalue operation") {
  gen::Source s(21);
  for (const auto& [label, p] : representative_rows()) {
    const auto d = restricted_datum(label, p);
    const auto form = eigenvalue_form(d);
    const auto poly = polynomial_form(d);
    for (int i = 0; i < 25; ++i) {
      const auto w = s.weight(d.two_delta_bar.size(), 12);
      std::vector<Rational> pt(w.begin(), w.end());
      CHECK(poly.evaluate(pt) == eigenvalue(form, DominantWeight(w)));
    }
  }
}

TEST_CASE("oracle: B2/C2 eigenvalues from explicit root vectors") {
  const std::vector<std::pair<L, SpaceParams>> cases{
      {L::BI, {4, 2}},          {L::BI, {7, 2}},          {L::DI_1, {std::nullopt, 2}}, {L::DI_2, {6, 2}},
      {L::CII_2, {std::nullopt, 2}}, {L::DIII_1, {std::nullopt, 2}}, {L::AIII_2, {std::nullopt, 2}},
      {L::CI, {std::nullopt, 2}}};
  for (const auto& [label, p] : cases) {
    const auto d = restricted_datum(label, p);
    CAPTURE(describe_params(d.descriptor));
    const oracle::ExplicitEigenvalue explicit_form(d);
    const auto form = eigenvalue_form(d);
    for (std::int64_t x = 0; x <= 20; ++x)
      for (std::int64_t y = 0; y <= 20; ++y) REQUIRE(eigenvalue(form, DominantWeight{x, y}) == explicit_form(x, y));
  }
}

TEST_CASE("enumerate_collisions examples") {
  const auto hits = enumerate_collisions(aiii2(), 5, false);
  REQUIRE(contains(hits, {0, 3}, {2, 0}));
  const auto it = std::find_if(hits.begin(), hits.end(), [](const CollisionReport& c) { return c.weight_a == DominantWeight{0, 3}; });
  CHECK(it->eigenvalue == Rational(36));
  CHECK_FALSE(it->dual_related);

  const auto bi = enumerate_collisions(restricted_datum(L::BI, {3, 2}), 7, false);
  CHECK(contains(bi, {0, 4}, {6, 0}));

  const auto s2 = restricted_datum(L::Sphere, {2, std::nullopt});
  CHECK(enumerate_collisions(s2, 2000, false).empty());
}

TEST_CASE("property: enumerate_collisions matches a brute-force pair scan") {
  const std::vector<std::pair<RestrictedDatum, std::int64_t>> cases{
      {ai(3), 5}, {aiii2(), 8}, {restricted_datum(L::DI_3, {std::nullopt, 5}), 2}, {restricted_datum(L::G, {}), 12}};
  for (const auto& [d, bound] : cases) {
    CAPTURE(describe_params(d.descriptor));
    const auto form = eigenvalue_form(d);
    const auto weights = box(d.two_delta_bar.size(), bound);
    std::size_t all = 0, non_dual = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      for (std::size_t j = i + 1; j < weights.size(); ++j)
        if (eigenvalue(form, weights[i]) == eigenvalue(form, weights[j])) {
          ++all;
          if (dual_weight(d, weights[i]) != weights[j]) ++non_dual;
        }
    const auto with_duals = enumerate_collisions(d, bound, false);
    const auto without = enumerate_collisions(d, bound, true);
    CHECK(with_duals.size() == all);
    CHECK(without.size() == non_dual);
    for (const auto& c : with_duals) {
      CHECK(c.weight_a < c.weight_b);
      CHECK(eigenvalue(form, c.weight_a) == c.eigenvalue);
      CHECK(eigenvalue(form, c.weight_b) == c.eigenvalue);
      CHECK(c.dual_related == (dual_weight(d, c.weight_a) == c.weight_b));
    }
    CHECK(std::is_sorted(with_duals.begin(), with_duals.end(), [](const CollisionReport& a, const CollisionReport& b) {
      return std::tie(a.weight_a, a.weight_b) < std::tie(b.weight_a, b.weight_b);
    }));
  }
}

TEST_CASE("collision output does not depend on the worker count") {
  const auto d = ai(4);
  ::setenv("CASIMIR_THREADS", "1", 1);
  const auto one = enumerate_collisions(d, 5, false);
  ::setenv("CASIMIR_THREADS", "7", 1);
  const auto seven = enumerate_collisions(d, 5, false);
  ::unsetenv("CASIMIR_THREADS");
  REQUIRE(one.size() == seven.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].weight_a == seven[i].weight_a);
    CHECK(one[i].weight_b == seven[i].weight_b);
    CHECK(one[i].eigenvalue == seven[i].eigenvalue);
  }
}

TEST_CASE("dual weights") {
  const auto a3 = ai(3);
  CHECK(dual_weight(a3, {1, 0, 2}) == DominantWeight{2, 0, 1});
  CHECK(dual_weight(a3, {3, 0, 3}) == DominantWeight{3, 0, 3});
  CHECK(dual_weight(restricted_datum(L::DI_1, {std::nullopt, 2}), {4, 7}) == DominantWeight{4, 7});
  CHECK(dual_weight(restricted_datum(L::CP, {4, std::nullopt}), {5}) == DominantWeight{5});
}

TEST_CASE("property: dual weights share eigenvalues") {
  gen::Source s(22);
  for (const auto& [label, p] : representative_rows()) {
    const auto d = restricted_datum(label, p);
    const auto form = eigenvalue_form(d);
    for (int i = 0; i < 20; ++i) {
      const DominantWeight w(s.weight(d.two_delta_bar.size(), 9));
      CHECK(eigenvalue(form, dual_weight(d, w)) == eigenvalue(form, w));
      CHECK(dual_weight(d, dual_weight(d, w)) == w);
    }
  }
}

TEST_CASE("property: rank-one spectra are strictly increasing") {
  for (const auto& desc : rank_one_catalog()) {
    const auto form = eigenvalue_form(restricted_datum(desc));
    Rational prev(-1);
    for (std::int64_t m = 0; m <= 300; ++m) {
      const auto v = eigenvalue(form, DominantWeight{m});
      CHECK(v > prev);
      prev = v;
    }
  }
}
