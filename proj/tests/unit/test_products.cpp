#include <algorithm>
#include <map>

#include "doctest.h"
#include "generators.hpp"

#include "casimir/products.hpp"
#include "casimir/spectrum.hpp"

using namespace casimir;

namespace {

std::vector<FactorSpectrum> spectra(const std::vector<std::string>& names, std::int64_t bound) {
  std::vector<FactorSpectrum> out;
  for (const auto& n : names) out.push_back(factor_spectrum(parse_factor(n), bound));
  return out;
}

bool has_pair(const std::vector<BetaCollision>& v, const IndexArray& a, const IndexArray& b) {
  return std::any_of(v.begin(), v.end(), [&](const BetaCollision& c) { return c.a == a && c.b == b; });
}

}  // namespace

TEST_CASE("factor spectra") {
  const auto s2 = factor_spectrum(parse_factor("S2"), 3);
  CHECK(s2.eigenvalues == std::vector<Rational>{Rational(0), Rational(4), Rational(12), Rational(24)});
  CHECK_THROWS_AS(parse_factor("AI"), std::invalid_argument);
  CHECK_THROWS_AS(parse_factor("S"), std::invalid_argument);
  CHECK_THROWS_AS(factor_spectrum(describe(SpaceLabel::AI, {std::nullopt, 2}), 3), std::invalid_argument);
  CHECK_NOTHROW(parse_factor("CP3"));
  CHECK_NOTHROW(parse_factor("OP2"));
}

TEST_CASE("hyperplanes") {
  const auto f = spectra({"S2", "S2"}, 2);
  const auto hp = collision_hyperplanes(f);
  const std::vector<Integer> diag{Integer(-1), Integer(1)};
  CHECK(std::find(hp.begin(), hp.end(), diag) != hp.end());
  for (const auto& n : hp) {
    Integer g(0);
    bool pos = false, neg = false;
    for (const auto& c : n) {
      g = gcd(g, c);
      pos = pos || c > 0;
      neg = neg || c < 0;
    }
    CHECK(g == 1);
    CHECK((pos && neg));
    CHECK(*std::find_if(n.begin(), n.end(), [](const Integer& c) { return c != 0; }) < 0);
  }
  CHECK(std::is_sorted(hp.begin(), hp.end()));
  CHECK(collision_hyperplanes(spectra({"S2"}, 10)).empty());
}

TEST_CASE("single factor") {
  const auto f = spectra({"CP2"}, 20);
  const auto cert = generic_beta_certificate(f);
  REQUIRE(cert.has_value());
  CHECK(cert->beta == std::vector<Rational>{Rational(1)});
  CHECK(cert->holds());
}

TEST_CASE("unit beta on S2 x S2 collides") {
  const auto f = spectra({"S2", "S2"}, 30);
  const auto hits = beta_collisions(f, {Rational(1), Rational(1)});
  REQUIRE_FALSE(hits.empty());
  CHECK(hits.front().a == IndexArray{0, 1});
  CHECK(hits.front().b == IndexArray{1, 0});
  CHECK(has_pair(hits, {1, 2}, {2, 1}));
  const auto it = std::find_if(hits.begin(), hits.end(),
                               [](const BetaCollision& c) { return c.a == IndexArray{1, 2} && c.b == IndexArray{2, 1}; });
  CHECK(it->value == Rational(16));
  CHECK_THROWS_AS(beta_collisions(f, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("certified beta") {
  for (const auto& names : std::vector<std::vector<std::string>>{{"S2", "S2"}, {"S2", "CP2"}, {"S3", "S3", "S3"}}) {
    const auto f = spectra(names, names.size() == 3 ? 6 : 15);
    const auto cert = generic_beta_certificate(f);
    REQUIRE(cert.has_value());
    CHECK(cert->holds());
    CHECK(beta_collisions(f, cert->beta).empty());
    if (names[0] == names[1]) CHECK(cert->beta[0] != cert->beta[1]);
    // no hyperplane contains β
    for (const auto& n : collision_hyperplanes(f)) {
      Rational dot(0);
      for (std::size_t i = 0; i < n.size(); ++i) dot += Rational(n[i]) * cert->beta[i];
      CHECK_FALSE(dot.is_zero());
    }
  }
}

TEST_CASE("property: collisions are invariant under scaling beta") {
  const auto f = spectra({"S2", "CP3"}, 8);
  gen::Source s(61);
  for (int i = 0; i < 20; ++i) {
    const std::vector<Rational> beta{Rational(s.integer(1, 6)), Rational(s.integer(1, 6))};
    const auto t = s.positive_rational();
    const auto base = beta_collisions(f, beta);
    const auto scaled = beta_collisions(f, {beta[0] * t, beta[1] * t});
    REQUIRE(base.size() == scaled.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
      CHECK(base[k].a == scaled[k].a);
      CHECK(scaled[k].value == base[k].value * t);
    }
  }
}

TEST_CASE("oracle: beta collisions by brute force") {
  const auto f = spectra({"S2", "S4"}, 10);
  gen::Source s(62);
  for (int i = 0; i < 10; ++i) {
    const std::vector<Rational> beta{Rational(s.integer(1, 4)), Rational(s.integer(1, 4))};
    std::size_t expected = 0;
    for (std::int64_t a0 = 0; a0 <= 10; ++a0)
      for (std::int64_t a1 = 0; a1 <= 10; ++a1)
        for (std::int64_t b0 = 0; b0 <= 10; ++b0)
          for (std::int64_t b1 = 0; b1 <= 10; ++b1) {
            if (!(IndexArray{a0, a1} < IndexArray{b0, b1})) continue;
            const auto va = f[0].eigenvalues[a0] * beta[0] + f[1].eigenvalues[a1] * beta[1];
            const auto vb = f[0].eigenvalues[b0] * beta[0] + f[1].eigenvalues[b1] * beta[1];
            if (va == vb) ++expected;
          }
    CHECK(beta_collisions(f, beta).size() == expected);
  }
}

TEST_CASE("property: factor spectra are injective") {
  for (const auto& d : rank_one_catalog()) {
    const auto f = factor_spectrum(d, 200);
    CHECK(enumerate_collisions(restricted_datum(d), 200, false).empty());
    std::map<Rational, int> seen;
    for (const auto& v : f.eigenvalues) CHECK(++seen[v] == 1);
  }
}
