#include <algorithm>

#include "doctest.h"
#include "generators.hpp"

#include "casimir/witness.hpp"

using namespace casimir;
using L = SpaceLabel;

namespace {

std::vector<RestrictedDatum> witness_data() {
  std::vector<RestrictedDatum> out;
  for (int l = 3; l <= 6; ++l) out.push_back(restricted_datum(L::AI, {std::nullopt, l}));
  out.push_back(restricted_datum(L::BI, {5, 3}));
  out.push_back(restricted_datum(L::CI, {std::nullopt, 3}));
  out.push_back(restricted_datum(L::DIII_1, {std::nullopt, 3}));
  out.push_back(restricted_datum(L::DIII_2, {std::nullopt, 3}));
  out.push_back(restricted_datum(L::DI_3, {std::nullopt, 5}));
  out.push_back(restricted_datum(L::AII, {std::nullopt, 4}));
  for (L label : {L::EI, L::EII, L::EV, L::EVI, L::EVIII, L::EIX, L::FI}) out.push_back(restricted_datum(label, {}));
  return out;
}

// R_α v = v - 2(v, α)/(α, α) α, computed from the Gram matrix directly.
std::vector<Rational> mirror(const RationalMatrix& g, const std::vector<Rational>& a, const std::vector<Rational>& v) {
  Rational va(0), aa(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      va += v[i] * g[i][j] * a[j];
      aa += a[i] * g[i][j] * a[j];
    }
  std::vector<Rational> out(v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= Rational(2) * va / aa * a[i];
  return out;
}

}  // namespace

TEST_CASE("AI rank 3 witness") {
  const auto w = reflection_witness(restricted_datum(L::AI, {std::nullopt, 3}));
  CHECK(w.report.weight_a == DominantWeight{3, 0, 3});
  CHECK(w.report.weight_b == DominantWeight{0, 3, 2});
  CHECK(w.report.eigenvalue == Rational(108));
  CHECK(w.certificate.valid());
  CHECK(w.certificate.alpha_dot_delta.is_zero());
  CHECK(w.certificate.duality_retries == 0);
}

TEST_CASE("reflection sends M_i to M_j plus lower terms") {
  for (const auto& d : witness_data()) {
    const auto w = reflection_witness(d);
    const auto& c = w.certificate;
    std::vector<Rational> alpha(c.alpha.begin(), c.alpha.end());
    std::vector<Rational> mi(alpha.size(), Rational(0));
    mi[c.index_i] = Rational(1);
    const auto image = reflect(d.gram, alpha, mi);
    CAPTURE(describe_params(d.descriptor));
    CHECK(image[c.index_i] == Rational(0));
    CHECK(image[c.index_j] == Rational(1));
  }
}

TEST_CASE("property: witnesses on every datum in scope") {
  for (const auto& d : witness_data()) {
    CAPTURE(describe_params(d.descriptor));
    const auto w = reflection_witness(d);
    const auto& c = w.certificate;
    CHECK(c.valid());
    CHECK(d.two_delta_bar[c.index_i] == d.two_delta_bar[c.index_j]);
    CHECK(d.cartan.norms[c.index_i] == d.cartan.norms[c.index_j]);
    // independent recomputation
    const auto form = eigenvalue_form(d);
    CHECK(eigenvalue(form, w.report.weight_a) == eigenvalue(form, w.report.weight_b));
    CHECK(w.report.weight_a != w.report.weight_b);
    CHECK(dual_weight(d, w.report.weight_a) != w.report.weight_b);
    std::vector<Rational> alpha(c.alpha.begin(), c.alpha.end());
    std::vector<Rational> v(w.report.weight_a.coeffs.begin(), w.report.weight_a.coeffs.end());
    std::vector<Rational> wv(w.report.weight_b.coeffs.begin(), w.report.weight_b.coeffs.end());
    CHECK(mirror(d.gram, alpha, v) == wv);
    std::vector<Rational> delta(d.two_delta_bar);
    CHECK(mirror(d.gram, alpha, delta) == delta);
    // alpha is primitive and integral in the M-basis
    Integer g(0);
    for (const auto& a : c.alpha) g = gcd(g, a);
    CHECK(g == 1);
    for (std::size_t k = 0; k < c.m.size(); ++k)
      if (k != c.index_i && k != c.index_j) CHECK(Rational(static_cast<long>(c.m[k])) >= c.m_lower_bounds[k]);
    CHECK(c.m[c.index_i] == 1);
    CHECK(c.m[c.index_j] == 0);
  }
}

TEST_CASE("property: the witness reflection preserves eigenvalues on the dominant cone") {
  gen::Source s(31);
  for (const auto& d : witness_data()) {
    const auto w = reflection_witness(d);
    std::vector<Rational> alpha(w.certificate.alpha.begin(), w.certificate.alpha.end());
    const auto form = eigenvalue_form(d);
    int hits = 0;
    for (int t = 0; t < 100; ++t) {
      const auto raw = s.weight(alpha.size(), 10);
      std::vector<Rational> v(raw.begin(), raw.end());
      const auto image = mirror(d.gram, alpha, v);
      const bool dominant = std::all_of(image.begin(), image.end(), [](const Rational& c) { return c.sign() >= 0; });
      CHECK(eigenvalue(form, v) == eigenvalue(form, image));
      if (dominant) ++hits;
    }
    CAPTURE(describe_params(d.descriptor));
    CHECK(hits > 0);
  }
}

TEST_CASE("rank and admissibility errors") {
  CHECK_THROWS_AS(reflection_witness(restricted_datum(L::AI, {std::nullopt, 2})), std::domain_error);
  CHECK_THROWS_AS(reflection_witness(restricted_datum(L::EIII, {})), std::domain_error);
  const auto e7 = restricted_datum(L::EVII, {});
  const auto idx = witness_indices(e7);
  REQUIRE(idx.has_value());
  CHECK(e7.two_delta_bar[idx->first] == e7.two_delta_bar[idx->second]);
  CHECK(e7.cartan.norms[idx->first] == e7.cartan.norms[idx->second]);
}
