#include "casimir/products.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "casimir/candidates.hpp"
#include "casimir/spectrum.hpp"

namespace casimir {

FactorSpectrum factor_spectrum(const SymmetricSpaceDescriptor& factor, std::int64_t bound) {
  if (factor.rank != 1) throw std::invalid_argument(describe_params(factor) + " is not of rank one");
  if (bound < 0) throw std::invalid_argument("factor_spectrum: bound must be >= 0");
  const auto datum = restricted_datum(factor);
  const auto form = eigenvalue_form(datum);
  FactorSpectrum out{factor, {}};
  for (std::int64_t m = 0; m <= bound; ++m) out.eigenvalues.push_back(eigenvalue(form, DominantWeight{m}));
  return out;
}

SymmetricSpaceDescriptor parse_factor(const std::string& text) {
  const auto parsed = parse_label(text);
  switch (parsed.label) {
    case SpaceLabel::Sphere:
    case SpaceLabel::CP:
    case SpaceLabel::HP:
      if (!parsed.embedded) throw std::invalid_argument("factor '" + text + "' needs a dimension, e.g. S2");
      return describe(parsed.label, {parsed.embedded, std::nullopt});
    case SpaceLabel::FII:
    case SpaceLabel::OP2: return describe(parsed.label, {});
    default: throw std::invalid_argument("factor '" + text + "' is not a compact rank-one symmetric space");
  }
}

namespace {

// Per-factor eigenvalues scaled to integers by one common denominator.
struct ScaledTable {
  Integer scale{1};
  std::vector<std::vector<std::int64_t>> values;

  explicit ScaledTable(const std::vector<FactorSpectrum>& factors) {
    for (const auto& f : factors)
      for (const auto& v : f.eigenvalues) scale = lcm(scale, v.denominator());
    for (const auto& f : factors) {
      std::vector<std::int64_t> row;
      for (const auto& v : f.eigenvalues) {
        const Integer s = (v * Rational(scale)).numerator();
        if (!s.fits_slong_p()) throw std::overflow_error("factor eigenvalue too large");
        row.push_back(s.get_si());
      }
      values.push_back(std::move(row));
    }
  }
};

std::vector<IndexArray> box(const std::vector<FactorSpectrum>& factors) {
  if (factors.empty()) throw std::invalid_argument("at least one factor is required");
  std::vector<IndexArray> out;
  IndexArray a(factors.size(), 0);
  while (true) {
    out.push_back(a);
    std::size_t k = a.size();
    while (k > 0) {
      if (a[k - 1] + 1 < static_cast<std::int64_t>(factors[k - 1].eigenvalues.size())) {
        ++a[k - 1];
        break;
      }
      a[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace

WeightArrayTable weight_arrays(const std::vector<FactorSpectrum>& factors) {
  WeightArrayTable t;
  t.indices = box(factors);
  for (const auto& a : t.indices) {
    std::vector<Rational> l;
    for (std::size_t i = 0; i < a.size(); ++i) l.push_back(factors[i].eigenvalues[static_cast<std::size_t>(a[i])]);
    t.lambda.push_back(std::move(l));
  }
  return t;
}

std::vector<std::vector<Integer>> collision_hyperplanes(const std::vector<FactorSpectrum>& factors) {
  const ScaledTable table(factors);
  const auto arrays = box(factors);
  const std::size_t n = factors.size();
  std::set<std::vector<std::int64_t>> normals;
  std::vector<std::int64_t> diff(n);
  for (std::size_t x = 0; x < arrays.size(); ++x)
    for (std::size_t y = x + 1; y < arrays.size(); ++y) {
      bool pos = false, neg = false;
      std::int64_t g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        diff[i] = table.values[i][static_cast<std::size_t>(arrays[x][i])] -
                  table.values[i][static_cast<std::size_t>(arrays[y][i])];
        pos = pos || diff[i] > 0;
        neg = neg || diff[i] < 0;
        g = std::gcd(g, diff[i]);
      }
      if (!pos || !neg) continue;
      const auto first = std::find_if(diff.begin(), diff.end(), [](std::int64_t v) { return v != 0; });
      if (*first > 0) g = -g;
      std::vector<std::int64_t> normal(n);
      for (std::size_t i = 0; i < n; ++i) normal[i] = diff[i] / g;
      normals.insert(std::move(normal));
    }
  std::vector<std::vector<Integer>> out;
  for (const auto& v : normals) {
    std::vector<Integer> row;
    for (auto c : v) row.emplace_back(static_cast<long>(c));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<BetaCollision> beta_collisions(const std::vector<FactorSpectrum>& factors, const std::vector<Rational>& beta) {
  if (beta.size() != factors.size()) throw std::invalid_argument("beta has wrong length");
  const auto table = weight_arrays(factors);
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < table.indices.size(); ++x) {
    Rational v(0);
    for (std::size_t i = 0; i < beta.size(); ++i) v += table.lambda[x][i] * beta[i];
    groups[v].push_back(x);
  }
  std::vector<BetaCollision> out;
  for (const auto& [value, idx] : groups)
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t q = p + 1; q < idx.size(); ++q)
        out.push_back({table.indices[idx[p]], table.indices[idx[q]], value});
  std::sort(out.begin(), out.end(),
            [](const BetaCollision& l, const BetaCollision& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
  return out;
}

std::optional<BetaCertificate> generic_beta_certificate(const std::vector<FactorSpectrum>& factors,
                                                        std::size_t max_level) {
  const ScaledTable table(factors);
  const auto arrays = box(factors);
  const std::size_t n = factors.size();
  const auto seq = candidate_sequence(max_level + 1);

  BetaCertificate cert;
  cert.bound = static_cast<std::int64_t>(factors.front().eigenvalues.size()) - 1;
  cert.factors_injective = std::all_of(factors.begin(), factors.end(), [](const FactorSpectrum& f) {
    return std::adjacent_find(f.eigenvalues.begin(), f.eigenvalues.end(), std::greater_equal<>()) == f.eigenvalues.end();
  });

  std::vector<__int128> values(arrays.size());
  for (std::size_t level = 0; level <= max_level; ++level)
    for (const auto& idx : level_indices(n, level)) {
      ++cert.candidates_tried;
      for (std::size_t x = 0; x < arrays.size(); ++x) {
        __int128 v = 0;
        for (std::size_t i = 0; i < n; ++i)
          v += static_cast<__int128>(table.values[i][static_cast<std::size_t>(arrays[x][i])]) * seq[idx[i]];
        values[x] = v;
      }
      std::sort(values.begin(), values.end());
      if (std::adjacent_find(values.begin(), values.end()) != values.end()) continue;

      for (std::size_t i = 0; i < n; ++i) cert.beta.emplace_back(seq[idx[i]]);
      cert.arrays_checked = arrays.size();
      cert.values_distinct = beta_collisions(factors, cert.beta).empty();
      const auto normals = collision_hyperplanes(factors);
      cert.hyperplanes = normals.size();
      cert.avoids_hyperplanes = std::none_of(normals.begin(), normals.end(), [&](const std::vector<Integer>& nv) {
        Rational dot(0);
        for (std::size_t i = 0; i < n; ++i) dot += Rational(nv[i]) * cert.beta[i];
        return dot.is_zero();
      });
      return cert;
    }
  return std::nullopt;
}

}  // namespace casimir
