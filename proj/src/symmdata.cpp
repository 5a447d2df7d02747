#include "casimir/symmdata.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace casimir {

namespace {

struct LabelName {
  SpaceLabel label;
  const char* name;
};

constexpr std::array<LabelName, 29> kNames{{
    {SpaceLabel::AI, "AI"},         {SpaceLabel::AII, "AII"},       {SpaceLabel::AIII_1, "AIII(1)"},
    {SpaceLabel::AIII_2, "AIII(2)"}, {SpaceLabel::BI, "BI"},         {SpaceLabel::CI, "CI"},
    {SpaceLabel::CII_1, "CII(1)"},   {SpaceLabel::CII_2, "CII(2)"},  {SpaceLabel::DI_1, "DI(1)"},
    {SpaceLabel::DI_2, "DI(2)"},     {SpaceLabel::DI_3, "DI(3)"},    {SpaceLabel::DIII_1, "DIII(1)"},
    {SpaceLabel::DIII_2, "DIII(2)"}, {SpaceLabel::EI, "EI"},         {SpaceLabel::EII, "EII"},
    {SpaceLabel::EIII, "EIII"},      {SpaceLabel::EIV, "EIV"},       {SpaceLabel::EV, "EV"},
    {SpaceLabel::EVI, "EVI"},        {SpaceLabel::EVII, "EVII"},     {SpaceLabel::EVIII, "EVIII"},
    {SpaceLabel::EIX, "EIX"},        {SpaceLabel::FI, "FI"},         {SpaceLabel::FII, "FII"},
    {SpaceLabel::G, "G"},            {SpaceLabel::Sphere, "S"},      {SpaceLabel::CP, "CP"},
    {SpaceLabel::HP, "HP"},          {SpaceLabel::OP2, "OP2"},
}};

std::string normalize(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != '_' && ch != ' ') out.push_back(static_cast<char>(std::toupper(ch)));
  return out;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<RootMultiplicity> uniform(int n, RootMultiplicity m) {
  return std::vector<RootMultiplicity>(static_cast<std::size_t>(n), m);
}

std::vector<RootMultiplicity> chain_with_last(int n, RootMultiplicity body, RootMultiplicity last) {
  auto v = uniform(n, body);
  v.back() = last;
  return v;
}

int require(const std::optional<int>& v, const char* what, SpaceLabel label) {
  if (!v) throw std::invalid_argument(to_string(label) + ": missing parameter " + what);
  return *v;
}

void check(bool ok, SpaceLabel label, const std::string& msg) {
  if (!ok) throw std::invalid_argument(to_string(label) + ": " + msg);
}

// Rank-one descriptor: restricted A1 or BC1.
SymmetricSpaceDescriptor rank_one(SpaceLabel label, int r, RootMultiplicity m) {
  SymmetricSpaceDescriptor d;
  d.label = label;
  d.r = r;
  d.rank = 1;
  d.restricted_type = {m.doubled > 0 ? Family::BC : Family::A, 1};
  d.node_order = {0};
  d.multiplicities = {m};
  return d;
}

std::vector<int> family_involution(const RootSystemType& t) {
  const int l = t.rank;
  auto p = identity_perm(l);
  switch (t.family) {
    case Family::A: std::reverse(p.begin(), p.end()); break;
    case Family::D:
      if (l % 2 == 1 && l >= 3) std::swap(p[l - 2], p[l - 1]);
      break;
    case Family::E6:
      std::swap(p[0], p[5]);
      std::swap(p[2], p[4]);
      break;
    default: break;
  }
  return p;
}

}  // namespace

std::string to_string(SpaceLabel label) {
  for (const auto& n : kNames)
    if (n.label == label) return n.name;
  return "?";
}

ParsedLabel parse_label(const std::string& text) {
  const std::string key = normalize(text);
  for (const auto& n : kNames)
    if (normalize(n.name) == key) return {n.label, std::nullopt};
  // CROSS names with an embedded dimension.
  for (const auto& [prefix, label] : {std::pair{std::string("CP"), SpaceLabel::CP},
                                      std::pair{std::string("HP"), SpaceLabel::HP},
                                      std::pair{std::string("S"), SpaceLabel::Sphere}}) {
    if (key.size() > prefix.size() && key.compare(0, prefix.size(), prefix) == 0) {
      const std::string digits = key.substr(prefix.size());
      if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return {label, std::stoi(digits)};
    }
  }
  throw std::invalid_argument("unknown symmetric-space label '" + text + "'");
}

bool uses_range_parameter(SpaceLabel label) {
  switch (label) {
    case SpaceLabel::AIII_1:
    case SpaceLabel::BI:
    case SpaceLabel::CII_1:
    case SpaceLabel::DI_2:
    case SpaceLabel::Sphere:
    case SpaceLabel::CP:
    case SpaceLabel::HP: return true;
    default: return false;
  }
}

bool uses_rank_parameter(SpaceLabel label) {
  switch (label) {
    case SpaceLabel::AI:
    case SpaceLabel::AII:
    case SpaceLabel::AIII_1:
    case SpaceLabel::AIII_2:
    case SpaceLabel::BI:
    case SpaceLabel::CI:
    case SpaceLabel::CII_1:
    case SpaceLabel::CII_2:
    case SpaceLabel::DI_1:
    case SpaceLabel::DI_2:
    case SpaceLabel::DI_3:
    case SpaceLabel::DIII_1:
    case SpaceLabel::DIII_2: return true;
    default: return false;
  }
}

SymmetricSpaceDescriptor describe(SpaceLabel label, const SpaceParams& params) {
  using M = RootMultiplicity;
  const int r = uses_range_parameter(label) ? require(params.r, "r", label) : 0;
  const int l = uses_rank_parameter(label) ? require(params.rank, "rank", label) : 0;
  if (uses_rank_parameter(label)) check(l >= 1, label, "rank must be >= 1");

  SymmetricSpaceDescriptor d;
  d.label = label;
  d.r = r;
  d.rank = l;
  auto classical = [&](Family family, std::vector<RootMultiplicity> mult) {
    d.restricted_type = {family, l};
    d.node_order = identity_perm(l);
    d.multiplicities = std::move(mult);
  };

  switch (label) {
    case SpaceLabel::AI:
      if (l == 1) return rank_one(label, 0, {1, 0});
      classical(Family::A, uniform(l, {1, 0}));
      break;
    case SpaceLabel::AII:
      if (l == 1) return rank_one(label, 0, {4, 0});
      classical(Family::A, uniform(l, {4, 0}));
      break;
    case SpaceLabel::AIII_1:
      check(r >= 2 * l && r >= 2, label, "requires r >= 2*rank");
      if (l == 1) return rank_one(label, r, {2 * (r - 1), 1});
      classical(Family::C, chain_with_last(l, {2, 0}, {2 * (r + 1 - 2 * l), 1}));
      break;
    case SpaceLabel::AIII_2:
      check(l >= 2, label, "rank must be >= 2");
      classical(Family::C, chain_with_last(l, {2, 0}, {1, 0}));
      break;
    case SpaceLabel::BI:
      check(r >= 2 && l <= r, label, "requires r >= 2 and rank <= r");
      if (l == 1) return rank_one(label, r, {2 * r - 1, 0});
      classical(Family::B, chain_with_last(l, {1, 0}, {2 * (r - l) + 1, 0}));
      break;
    case SpaceLabel::CI:
      check(l >= 2, label, "rank must be >= 2");
      classical(Family::B, uniform(l, {1, 0}));
      break;
    case SpaceLabel::CII_1:
      check(r >= 3 && r > 2 * l, label, "requires r >= 3 and r > 2*rank");
      if (l == 1) return rank_one(label, r, {4 * (r - 2), 3});
      classical(Family::B, chain_with_last(l, {4, 0}, {4 * (r - 2 * l), 3}));
      break;
    case SpaceLabel::CII_2:
      check(l >= 2, label, "rank must be >= 2");
      classical(Family::B, chain_with_last(l, {4, 0}, {3, 0}));
      break;
    case SpaceLabel::DI_1:
      check(l >= 2, label, "rank must be >= 2");
      classical(Family::B, chain_with_last(l, {1, 0}, {2, 0}));
      break;
    case SpaceLabel::DI_2:
      check(r >= 4 && l <= r - 2, label, "requires r >= 4 and rank <= r-2");
      if (l == 1) return rank_one(label, r, {2 * r - 2, 0});
      classical(Family::B, chain_with_last(l, {1, 0}, {2 * (r - l), 0}));
      break;
    case SpaceLabel::DI_3:
      check(l >= 3, label, "rank must be >= 3");
      classical(Family::D, uniform(l, {1, 0}));
      break;
    case SpaceLabel::DIII_1:
      check(l >= 2, label, "rank must be >= 2");
      classical(Family::B, chain_with_last(l, {4, 0}, {1, 0}));
      break;
    case SpaceLabel::DIII_2:
      if (l == 1) return rank_one(label, 0, {4, 1});
      classical(Family::C, chain_with_last(l, {4, 0}, {4, 1}));
      break;
    case SpaceLabel::EI:
      d.rank = 6;
      d.restricted_type = {Family::E6, 6};
      d.node_order = identity_perm(6);
      d.multiplicities = uniform(6, {1, 0});
      break;
    case SpaceLabel::EII:
      // Catalog nodes follow the Satake pairing {1,6},{2},{3,5},{4} of E6;
      // in Bourbaki F4 numbering these are α4, α1, α3, α2.
      d.rank = 4;
      d.restricted_type = {Family::F4, 4};
      d.node_order = {3, 0, 2, 1};
      d.multiplicities = {M{2, 0}, M{1, 0}, M{2, 0}, M{1, 0}};
      break;
    case SpaceLabel::EIII:
      // Node 1 is the simple root γ with 2γ restricted (m_γ = 8, m_2γ = 1),
      // node 2 the root of multiplicity 6.
      d.rank = 2;
      d.restricted_type = {Family::B, 2};
      d.node_order = identity_perm(2);
      d.multiplicities = {M{8, 1}, M{6, 0}};
      break;
    case SpaceLabel::EIV:
      d.rank = 2;
      d.restricted_type = {Family::A, 2};
      d.node_order = identity_perm(2);
      d.multiplicities = uniform(2, {8, 0});
      break;
    case SpaceLabel::EV:
      d.rank = 7;
      d.restricted_type = {Family::E7, 7};
      d.node_order = identity_perm(7);
      d.multiplicities = uniform(7, {1, 0});
      break;
    case SpaceLabel::EVI:
      d.rank = 4;
      d.restricted_type = {Family::F4, 4};
      d.node_order = identity_perm(4);
      d.multiplicities = {M{1, 0}, M{1, 0}, M{4, 0}, M{4, 0}};
      break;
    case SpaceLabel::EVII:
      d.rank = 3;
      d.restricted_type = {Family::B, 3};
      d.node_order = identity_perm(3);
      d.multiplicities = {M{8, 0}, M{8, 0}, M{1, 0}};
      break;
    case SpaceLabel::EVIII:
      d.rank = 8;
      d.restricted_type = {Family::E8, 8};
      d.node_order = identity_perm(8);
      d.multiplicities = uniform(8, {1, 0});
      break;
    case SpaceLabel::EIX:
      d.rank = 4;
      d.restricted_type = {Family::F4, 4};
      d.node_order = identity_perm(4);
      d.multiplicities = {M{1, 0}, M{1, 0}, M{8, 0}, M{8, 0}};
      break;
    case SpaceLabel::FI:
      d.rank = 4;
      d.restricted_type = {Family::F4, 4};
      d.node_order = identity_perm(4);
      d.multiplicities = uniform(4, {1, 0});
      break;
    case SpaceLabel::FII:
    case SpaceLabel::OP2: return rank_one(label, 0, {8, 7});
    case SpaceLabel::G:
      d.rank = 2;
      d.restricted_type = {Family::G2, 2};
      d.node_order = identity_perm(2);
      d.multiplicities = uniform(2, {1, 0});
      break;
    case SpaceLabel::Sphere:
      check(r >= 2, label, "sphere dimension must be >= 2");
      return rank_one(label, r, {r - 1, 0});
    case SpaceLabel::CP:
      check(r >= 2, label, "CP^n needs n >= 2 (CP^1 is S2)");
      return rank_one(label, r, {2 * (r - 1), 1});
    case SpaceLabel::HP:
      check(r >= 2, label, "HP^n needs n >= 2 (HP^1 is S4)");
      return rank_one(label, r, {4 * (r - 1), 3});
  }
  return d;
}

std::vector<int> dual_permutation(const SymmetricSpaceDescriptor& descriptor) {
  const auto fam = family_involution(descriptor.restricted_type);
  const auto& order = descriptor.node_order;
  std::vector<int> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::vector<int> sigma(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sigma[i] = position[fam[order[i]]];
  return sigma;
}

std::vector<Rational> delta_bar_coeffs(const std::vector<RootMultiplicity>& multiplicities) {
  std::vector<Rational> k;
  k.reserve(multiplicities.size());
  for (const auto& m : multiplicities) {
    if (m.simple < 1 || m.doubled < 0) throw std::invalid_argument("multiplicity m_gamma must be >= 1");
    if (m.doubled == 0)
      k.push_back(Rational(m.simple, 2));
    else
      k.push_back(Rational(m.simple + 2 * m.doubled, 4));
  }
  return k;
}

std::vector<AffineEntry> two_delta_bar_row(SpaceLabel label, int rank) {
  auto ones = [](int n, long c) { return std::vector<AffineEntry>(static_cast<std::size_t>(n), {Rational(c), Rational(0)}); };
  auto with_last = [&](int n, long body, AffineEntry last) {
    auto v = ones(n, body);
    v.back() = last;
    return v;
  };
  auto fixed = [](std::initializer_list<long> vals) {
    std::vector<AffineEntry> v;
    for (long x : vals) v.push_back({Rational(x), Rational(0)});
    return v;
  };
  const long l = rank;
  switch (label) {
    case SpaceLabel::AI: return ones(rank, 1);
    case SpaceLabel::AII: return ones(rank, 4);
    case SpaceLabel::AIII_1: return with_last(rank, 2, {Rational(2 - 2 * l), Rational(1)});
    case SpaceLabel::AIII_2: return with_last(rank, 2, {Rational(1), Rational(0)});
    case SpaceLabel::BI: return with_last(rank, 1, {Rational(1 - 2 * l), Rational(2)});
    case SpaceLabel::CI: return ones(rank, 1);
    case SpaceLabel::CII_1: return with_last(rank, 4, {Rational(3 - 4 * l), Rational(2)});
    case SpaceLabel::CII_2: return with_last(rank, 4, {Rational(3), Rational(0)});
    case SpaceLabel::DI_1: return with_last(rank, 1, {Rational(2), Rational(0)});
    case SpaceLabel::DI_2: return with_last(rank, 1, {Rational(-2 * l), Rational(2)});
    case SpaceLabel::DI_3: return ones(rank, 1);
    case SpaceLabel::DIII_1: return with_last(rank, 4, {Rational(1), Rational(0)});
    case SpaceLabel::DIII_2: return with_last(rank, 4, {Rational(3), Rational(0)});
    case SpaceLabel::EI: return fixed({1, 1, 1, 1, 1, 1});
    case SpaceLabel::EII: return fixed({2, 1, 2, 1});
    case SpaceLabel::EIII: return fixed({5, 6});
    case SpaceLabel::EIV: return fixed({8, 8});
    case SpaceLabel::EV: return fixed({1, 1, 1, 1, 1, 1, 1});
    case SpaceLabel::EVI: return fixed({1, 1, 4, 4});
    case SpaceLabel::EVII: return fixed({8, 8, 1});
    case SpaceLabel::EVIII: return fixed({1, 1, 1, 1, 1, 1, 1, 1});
    case SpaceLabel::EIX: return fixed({1, 1, 8, 8});
    case SpaceLabel::FI: return fixed({1, 1, 1, 1});
    case SpaceLabel::FII:
    case SpaceLabel::OP2: return fixed({11});
    case SpaceLabel::G: return fixed({1, 1});
    case SpaceLabel::Sphere: return {{Rational(-1), Rational(1)}};
    case SpaceLabel::CP: return {{Rational(0), Rational(1)}};
    case SpaceLabel::HP: return {{Rational(1), Rational(2)}};
  }
  return {};
}

std::vector<Rational> two_delta_bar_values(SpaceLabel label, const SpaceParams& params) {
  const auto d = describe(label, params);
  std::vector<Rational> out;
  for (const auto& e : two_delta_bar_row(label, d.rank)) out.push_back(e.constant + e.slope * Rational(d.r));
  return out;
}

RestrictedDatum restricted_datum(const SymmetricSpaceDescriptor& descriptor) {
  RestrictedDatum datum;
  datum.descriptor = descriptor;
  datum.descriptor.involution = dual_permutation(descriptor);
  datum.cartan = permute_nodes(cartan_data(descriptor.restricted_type), descriptor.node_order);
  for (std::size_t i = 0; i < descriptor.multiplicities.size(); ++i)
    datum.cartan.doubled[i] = descriptor.multiplicities[i].doubled > 0;
  datum.gram = gram_matrix(datum.cartan);
  for (const auto& k : delta_bar_coeffs(descriptor.multiplicities)) datum.two_delta_bar.push_back(Rational(2) * k);

  const auto row = two_delta_bar_row(descriptor.label, descriptor.rank);
  if (row.size() != datum.two_delta_bar.size())
    throw std::logic_error(to_string(descriptor.label) + ": 2δ̄ row length mismatch");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].constant + row[i].slope * Rational(descriptor.r) != datum.two_delta_bar[i])
      throw std::logic_error(to_string(descriptor.label) + ": multiplicities disagree with the 2δ̄ table");
  }
  return datum;
}

RestrictedDatum restricted_datum(SpaceLabel label, const SpaceParams& params) {
  return restricted_datum(describe(label, params));
}

std::vector<std::pair<SpaceLabel, SpaceParams>> representative_rows() {
  using L = SpaceLabel;
  return {
      {L::AI, {std::nullopt, 5}},   {L::AII, {std::nullopt, 3}},  {L::AIII_1, {6, 2}},
      {L::AIII_1, {6, 3}},          {L::AIII_2, {std::nullopt, 3}}, {L::BI, {4, 2}},
      {L::CI, {std::nullopt, 3}},   {L::CII_1, {7, 2}},           {L::CII_2, {std::nullopt, 3}},
      {L::DI_1, {std::nullopt, 3}}, {L::DI_2, {5, 3}},            {L::DI_3, {std::nullopt, 4}},
      {L::DIII_1, {std::nullopt, 3}}, {L::DIII_2, {std::nullopt, 3}}, {L::EI, {}},
      {L::EII, {}},                 {L::EIII, {}},                {L::EIV, {}},
      {L::EV, {}},                  {L::EVI, {}},                 {L::EVII, {}},
      {L::EVIII, {}},               {L::EIX, {}},                 {L::FI, {}},
      {L::G, {}},
  };
}

std::vector<SymmetricSpaceDescriptor> rank_one_catalog() {
  std::vector<SymmetricSpaceDescriptor> out;
  for (int n = 2; n <= 12; ++n) out.push_back(describe(SpaceLabel::Sphere, {n, std::nullopt}));
  for (int n = 2; n <= 8; ++n) out.push_back(describe(SpaceLabel::CP, {n, std::nullopt}));
  for (int n = 2; n <= 6; ++n) out.push_back(describe(SpaceLabel::HP, {n, std::nullopt}));
  out.push_back(describe(SpaceLabel::OP2, {}));
  out.push_back(describe(SpaceLabel::FII, {}));
  out.push_back(describe(SpaceLabel::DIII_2, {std::nullopt, 1}));
  out.push_back(describe(SpaceLabel::AII, {std::nullopt, 1}));
  out.push_back(describe(SpaceLabel::AI, {std::nullopt, 1}));
  return out;
}

std::string describe_params(const SymmetricSpaceDescriptor& d) {
  std::string s = to_string(d.label);
  if (d.label == SpaceLabel::Sphere || d.label == SpaceLabel::CP || d.label == SpaceLabel::HP)
    return s + std::to_string(d.r);
  if (uses_range_parameter(d.label)) s += " r=" + std::to_string(d.r);
  if (uses_rank_parameter(d.label)) s += " rank=" + std::to_string(d.rank);
  return s;
}

}  // namespace casimir
