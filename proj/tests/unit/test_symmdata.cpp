#include <algorithm>
#include <map>

#include "doctest.h"
#include "reference_tables.hpp"

#include "casimir/symmdata.hpp"

using namespace casimir;
using L = SpaceLabel;

namespace {

using ref::ints;
using ref::table_row;

const std::vector<L> classical{L::AI,    L::AII,  L::AIII_1, L::AIII_2, L::BI,   L::CI,     L::CII_1,
                               L::CII_2, L::DI_1, L::DI_2,   L::DI_3,   L::DIII_1, L::DIII_2};

}  // namespace

TEST_CASE("table rows at the representative parameters") {
  const auto rows = representative_rows();
  CHECK(rows.size() == 25);
  for (const auto& [label, p] : rows) {
    const auto d = restricted_datum(label, p);
    CAPTURE(describe_params(d.descriptor));
    CHECK(d.two_delta_bar == table_row(label, d.descriptor.r, d.rank()));
  }
}

TEST_CASE("named examples") {
  CHECK(restricted_datum(L::AI, {std::nullopt, 7}).two_delta_bar == std::vector<Rational>(7, Rational(1)));
  CHECK(restricted_datum(L::BI, {4, 2}).two_delta_bar == ints({1, 5}));
  CHECK(restricted_datum(L::EIII, {}).two_delta_bar == ints({5, 6}));
}

TEST_CASE("property: every classical row over its parameter range") {
  int accepted = 0;
  for (L label : classical)
    for (int l = 2; l <= 7; ++l)
      for (int r = 0; r <= 20; ++r) {
        SpaceParams p{uses_range_parameter(label) ? std::optional<int>(r) : std::nullopt, l};
        if (!uses_range_parameter(label) && r > 0) continue;
        SymmetricSpaceDescriptor d;
        try {
          d = describe(label, p);
        } catch (const std::invalid_argument&) {
          continue;
        }
        ++accepted;
        const auto datum = restricted_datum(d);
        CAPTURE(describe_params(d));
        CHECK(datum.two_delta_bar == table_row(label, r, l));
        for (const auto& c : datum.two_delta_bar) CHECK(c.sign() > 0);
      }
  CHECK(accepted > 200);
}

TEST_CASE("parameter ranges") {
  CHECK_NOTHROW(describe(L::AIII_1, {4, 2}));
  CHECK_THROWS_AS(describe(L::AIII_1, {3, 2}), std::invalid_argument);
  CHECK_NOTHROW(describe(L::BI, {2, 2}));
  CHECK_THROWS_AS(describe(L::BI, {1, 2}), std::invalid_argument);
  CHECK_NOTHROW(describe(L::CII_1, {5, 2}));
  CHECK_THROWS_AS(describe(L::CII_1, {4, 2}), std::invalid_argument);
  CHECK_NOTHROW(describe(L::DI_2, {4, 2}));
  CHECK_THROWS_AS(describe(L::DI_2, {4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(describe(L::AI, {}), std::invalid_argument);
  CHECK_THROWS_AS(describe(L::BI, {std::nullopt, 2}), std::invalid_argument);
}

TEST_CASE("rank-two restricted types and 2δ̄") {
  struct Row {
    L label;
    std::optional<int> r;
    Family family;
    std::vector<Rational> delta;
  };
  const std::vector<Row> rows{
      {L::AIII_1, 7, Family::C, ints({2, 5})}, {L::AIII_2, std::nullopt, Family::C, ints({2, 1})},
      {L::BI, 6, Family::B, ints({1, 9})},     {L::CII_1, 8, Family::B, ints({4, 11})},
      {L::CII_2, std::nullopt, Family::B, ints({4, 3})}, {L::DI_1, std::nullopt, Family::B, ints({1, 2})},
      {L::DI_2, 9, Family::B, ints({1, 14})},  {L::DIII_1, std::nullopt, Family::B, ints({4, 1})},
      {L::DIII_2, std::nullopt, Family::C, ints({4, 3})},
  };
  for (const auto& row : rows) {
    const auto d = restricted_datum(row.label, {row.r, 2});
    CAPTURE(describe_params(d.descriptor));
    CHECK(d.descriptor.restricted_type == RootSystemType{row.family, 2});
    CHECK(d.two_delta_bar == row.delta);
  }
  CHECK(restricted_datum(L::EIII, {}).descriptor.restricted_type == RootSystemType{Family::B, 2});
}

TEST_CASE("delta_bar_coeffs") {
  CHECK(delta_bar_coeffs({{1, 0}}) == std::vector<Rational>{Rational(1, 2)});
  CHECK(delta_bar_coeffs({{8, 0}}) == ints({4}));
  CHECK(delta_bar_coeffs({{2, 1}}) == ints({1}));
  CHECK_THROWS_AS(delta_bar_coeffs({{0, 0}}), std::invalid_argument);
}

TEST_CASE("dual permutation") {
  CHECK(dual_permutation(describe(L::AI, {std::nullopt, 3})) == std::vector<int>{2, 1, 0});
  CHECK(dual_permutation(describe(L::DI_1, {std::nullopt, 2})) == std::vector<int>{0, 1});
  CHECK(dual_permutation(describe(L::Sphere, {3, std::nullopt})) == std::vector<int>{0});
  CHECK(dual_permutation(describe(L::CP, {3, std::nullopt})) == std::vector<int>{0});
  // D_ℓ with ℓ odd swaps the two spin nodes; ℓ even fixes them
  CHECK(dual_permutation(describe(L::DI_3, {std::nullopt, 5})) == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(dual_permutation(describe(L::DI_3, {std::nullopt, 4})) == std::vector<int>{0, 1, 2, 3});
  for (L label : {L::EII, L::EIII, L::EV, L::EVI, L::EVII, L::EVIII, L::EIX, L::FI, L::G}) {
    const auto p = dual_permutation(describe(label, {}));
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i] == static_cast<int>(i));
  }
  const auto e6 = dual_permutation(describe(L::EI, {}));
  CHECK(e6 != std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("property: involutions square to the identity") {
  std::vector<SymmetricSpaceDescriptor> all;
  for (const auto& [label, p] : representative_rows()) all.push_back(describe(label, p));
  for (int l = 2; l <= 7; ++l) {
    all.push_back(describe(L::AI, {std::nullopt, l}));
    all.push_back(describe(L::DI_3, {std::nullopt, std::max(l, 3)}));
  }
  for (const auto& d : rank_one_catalog()) all.push_back(d);
  for (const auto& d : all) {
    const auto p = dual_permutation(d);
    CAPTURE(describe_params(d));
    REQUIRE(p.size() == static_cast<std::size_t>(d.rank));
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[static_cast<std::size_t>(p[i])] == static_cast<int>(i));
  }
}

TEST_CASE("rank-one catalog") {
  const auto cat = rank_one_catalog();
  CHECK(cat.size() >= 20);
  std::map<Family, int> families;
  for (const auto& d : cat) {
    CAPTURE(describe_params(d));
    CHECK(d.rank == 1);
    ++families[d.restricted_type.family];
    const auto datum = restricted_datum(d);
    CHECK(datum.two_delta_bar.size() == 1);
    CHECK(datum.two_delta_bar[0].sign() > 0);
  }
  CHECK(families[Family::A] > 0);
  CHECK(families[Family::BC] > 0);
  // S^n: 2δ̄ = n - 1
  CHECK(restricted_datum(L::Sphere, {5, std::nullopt}).two_delta_bar == ints({4}));
}

TEST_CASE("label parsing") {
  CHECK(parse_label("AIII(1)").label == L::AIII_1);
  CHECK(parse_label("AIII1").label == L::AIII_1);
  CHECK(parse_label("AIII_1").label == L::AIII_1);
  CHECK(parse_label("EIII").label == L::EIII);
  const auto s = parse_label("S2");
  CHECK(s.label == L::Sphere);
  CHECK(s.embedded == 2);
  CHECK(parse_label("CP3").embedded == 3);
  CHECK(parse_label("OP2").label == L::OP2);
  CHECK_THROWS_AS(parse_label("XYZ"), std::invalid_argument);
  for (const auto& [label, p] : representative_rows()) CHECK(parse_label(to_string(label)).label == label);
}
