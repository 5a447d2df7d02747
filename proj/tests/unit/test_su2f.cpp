#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "generators.hpp"

#include "casimir/su2f.hpp"

using namespace casimir;

namespace {

using C = std::complex<double>;
using M2 = std::array<C, 4>;

M2 mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool close(const M2& a, const M2& b) {
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

// The binary dihedral group as explicit complex matrices.
std::vector<M2> float_group() {
  const C w = std::polar(1.0, std::numbers::pi / 3);
  const M2 s{w, 0, 0, std::conj(w)};
  const M2 t{0, C(0, 1), C(0, 1), 0};
  std::vector<M2> g{{1, 0, 0, 1}};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& gen : {s, t}) {
      const auto h = mul(g[i], gen);
      if (std::none_of(g.begin(), g.end(), [&](const M2& x) { return close(x, h); })) g.push_back(h);
    }
  return g;
}

// dim V_k^F = average of the character of Sym^k over the group.
std::size_t character_dimension(int k) {
  static const auto group = float_group();
  C total = 0;
  for (const auto& g : group) {
    const C tr = g[0] + g[3];
    const C det = g[0] * g[3] - g[1] * g[2];
    const C disc = std::sqrt(tr * tr - 4.0 * det);
    const C m1 = (tr + disc) / 2.0, m2 = (tr - disc) / 2.0;
    C chi = 0;
    for (int l = 0; l <= k; ++l) chi += std::pow(m1, l) * std::pow(m2, k - l);
    total += chi;
  }
  const double d = (total / static_cast<double>(group.size())).real();
  return static_cast<std::size_t>(std::llround(d));
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(generate_group({sigma_generator(), tau_generator()}).size() == 12);
  CHECK(float_group().size() == 12);
  const auto s = sigma_generator();
  auto p = MonomialMatrix::identity();
  for (int i = 0; i < 6; ++i) p = p * s;
  CHECK(p == MonomialMatrix::identity());
  const auto t = tau_generator();
  CHECK(t * t == (MonomialMatrix{false, 6, 6}));
}

TEST_CASE("cyclotomic arithmetic") {
  CHECK(Cyclo12::root(12) == Cyclo12(Rational(1)));
  CHECK(Cyclo12::root(6) == Cyclo12(Rational(-1)));
  CHECK(Cyclo12::root(5) * Cyclo12::root(9) == Cyclo12::root(2));
  CHECK(Cyclo12::root(-1) == Cyclo12::root(11));
  // ζ² - ζ⁴ = 1 at a primitive 12th root
  CHECK(Cyclo12::root(2) - Cyclo12::root(4) == Cyclo12(Rational(1)));
  gen::Source s(51);
  for (int i = 0; i < 200; ++i) {
    Cyclo12 x;
    for (int j = 0; j < 4; ++j) x += Cyclo12(s.rational()) * Cyclo12::root(j);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == Cyclo12(Rational(1)));
  }
  CHECK_THROWS_AS(Cyclo12().inverse(), std::domain_error);
}

TEST_CASE("fixed spaces at small k") {
  CHECK(fixed_space(0).dimension() == 1);
  CHECK(fixed_space(1).dimension() == 0);
  CHECK(fixed_space(2).dimension() == 0);
  const auto f4 = fixed_space(4);
  REQUIRE(f4.dimension() == 1);
  CHECK(f4.basis[0].size() == 1);
  CHECK(f4.basis[0].begin()->first == 2);
  CHECK(f4.basis_d == std::vector<int>{0});
  const auto forms4 = eigenvalue_forms(4);
  REQUIRE(forms4.size() == 1);
  CHECK(forms4[0].a_coeff == Rational(0));
  CHECK(forms4[0].b_coeff == Rational(3));

  const auto f12 = fixed_space(12);
  CHECK(f12.dimension() == 3);
  CHECK(f12.ell_values == std::vector<int>{0, 6, 12});
  const auto forms12 = eigenvalue_forms(12);
  CHECK(std::any_of(forms12.begin(), forms12.end(),
                    [](const auto& f) { return f.a_coeff == Rational(0) && f.b_coeff == Rational(21); }));
  CHECK(std::any_of(forms12.begin(), forms12.end(), [](const auto& f) {
    return f.a_coeff == Rational(-9, 2) && f.b_coeff == Rational(51, 2);
  }));
  CHECK_THROWS_AS(eigenvalue_forms(2), std::invalid_argument);
  CHECK_THROWS_AS(fixed_space(-1), std::invalid_argument);
}

TEST_CASE("oracle: fixed-space dimension from the character") {
  for (int k = 0; k <= 60; ++k) {
    CAPTURE(k);
    const auto d = fixed_space(k).dimension();
    CHECK(d == character_dimension(k));
    CHECK(d == predicted_dimension(k));
    if (k % 2 == 1) CHECK(d == 0);
  }
}

TEST_CASE("certificate") {
  const auto c = simplicity_certificate(12);
  CHECK(c.holds());
  CHECK(c.dimensions.size() == 13);
  const auto bad = simplicity_certificate(12, std::pair{Rational(1), Rational(1)});
  CHECK_FALSE(bad.metric_collisions.empty());
  CHECK_FALSE(bad.holds());
  const auto good = simplicity_certificate(12, std::pair{Rational(1), Rational(2)});
  CHECK(good.metric_collisions.empty());
  CHECK(good.holds());
  CHECK_THROWS_AS(simplicity_certificate(1), std::invalid_argument);
  CHECK_THROWS_AS(simplicity_certificate(4, std::pair{Rational(0), Rational(1)}), std::invalid_argument);
}

TEST_CASE("metric search") {
  const auto m = search_metric(30);
  REQUIRE(m.has_value());
  CHECK(m->first != m->second);
  CHECK(simplicity_certificate(30, m).holds());
}

TEST_CASE("property: collisions are invariant under scaling the metric") {
  const auto forms = simplicity_certificate(24).forms;
  gen::Source s(52);
  for (int i = 0; i < 40; ++i) {
    const auto a = s.positive_rational();
    const auto b = s.positive_rational();
    const auto t = s.positive_rational();
    CHECK(collisions_at(forms, a, b).size() == collisions_at(forms, a * t, b * t).size());
  }
}

TEST_CASE("property: eigenvalues agree with the explicit Casimir value") {
  // λ = b·k(k+2)/8 + (b - a)·d²/8
  gen::Source s(53);
  for (int i = 0; i < 200; ++i) {
    const int k = static_cast<int>(s.integer(0, 40));
    const int d = static_cast<int>(s.integer(0, k));
    const auto a = s.positive_rational();
    const auto b = s.positive_rational();
    const Rational expected =
        b * Rational(static_cast<long>(k) * (k + 2), 8) + (b - a) * Rational(static_cast<long>(d) * d, 8);
    CHECK(two_param_eigenvalue(k, d).at(a, b) == expected);
  }
}
