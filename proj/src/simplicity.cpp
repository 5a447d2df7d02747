#include "casimir/simplicity.hpp"

#include <map>
#include <stdexcept>

#include "casimir/bundles.hpp"
#include "casimir/parallel.hpp"
#include "casimir/su2f.hpp"
#include "casimir/unipoly.hpp"

namespace casimir {

std::string to_string(TypeClass t) {
  switch (t) {
    case TypeClass::Real: return "real";
    case TypeClass::Complex: return "complex";
    case TypeClass::Quaternionic: return "quaternionic";
  }
  return "?";
}

void validate(const RepresentationFamily& family) {
  std::map<std::string, const RepresentationEntry*> by_id;
  for (const auto& e : family.entries)
    if (!by_id.emplace(e.id, &e).second) throw std::invalid_argument("duplicate entry id " + e.id);
  for (const auto& e : family.entries) {
    if (!e.casimir.is_square()) throw std::invalid_argument(e.id + ": Casimir matrix is not square");
    const auto it = by_id.find(e.dual_id);
    if (it == by_id.end()) throw std::invalid_argument(e.id + ": dual " + e.dual_id + " is not in the family");
    if (it->second->dual_id != e.id) throw std::invalid_argument(e.id + ": duality is not symmetric");
    if ((e.type == TypeClass::Complex) != (e.dual_id != e.id))
      throw std::invalid_argument(e.id + ": complex type must coincide with not being self-dual");
  }
}

namespace {

bool pair_is_dual(const RepresentationEntry& v, const RepresentationEntry& w) { return v.dual_id == w.id; }

std::vector<UniPoly> char_polys(const RepresentationFamily& family) {
  std::vector<UniPoly> out;
  for (const auto& e : family.entries) out.push_back(char_poly(e.casimir));
  return out;
}

QPoly at_point(const UniPoly& p, const std::vector<Rational>& point) { return QPoly(p.evaluate_parameters(point)); }

bool shares_root(const QPoly& p, const QPoly& q) { return gcd(p, q).degree().value_or(0) > 0; }

bool has_repeated_root(const QPoly& p) { return shares_root(p, p.derivative()); }

}  // namespace

std::vector<EntryPair> condition_a(const RepresentationFamily& family) {
  const auto polys = char_polys(family);
  const std::size_t n = family.entries.size();
  std::vector<std::vector<EntryPair>> per_row(n);
  run_sharded(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pair_is_dual(family.entries[i], family.entries[j])) continue;
      if (resultant(polys[i], polys[j]).is_zero()) per_row[i].emplace_back(family.entries[i].id, family.entries[j].id);
    }
  });
  std::vector<EntryPair> out;
  for (auto& row : per_row) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<std::string> condition_b(const RepresentationFamily& family) {
  std::vector<std::string> out;
  for (const auto& e : family.entries) {
    if (e.type == TypeClass::Quaternionic || e.casimir.dim() < 2) continue;
    const auto p = char_poly(e.casimir);
    if (resultant(p, derivative(p, 1)).is_zero()) out.push_back(e.id);
  }
  return out;
}

std::vector<std::string> condition_c(const RepresentationFamily& family) {
  std::vector<std::string> out;
  for (const auto& e : family.entries) {
    if (e.type == TypeClass::Complex || e.casimir.dim() < 2) continue;
    const auto p = char_poly(e.casimir);
    if (resultant(p, derivative(p, 2)).is_zero()) out.push_back(e.id);
  }
  return out;
}

bool MetricReport::holds() const {
  if (mode == SimplicityMode::Real) return ri1.empty() && ri2.empty() && ri3.empty();
  return ci1.empty() && ci2.empty() && ci3.empty();
}

MetricReport evaluate_at_metric(const RepresentationFamily& family, const std::vector<Rational>& point,
                                SimplicityMode mode) {
  if (point.size() != family.parameters.size()) throw std::invalid_argument("metric point has wrong length");
  for (const auto& c : point)
    if (c.sign() <= 0) throw std::invalid_argument("metric parameters must be positive");
  MetricReport r;
  r.mode = mode;
  r.point = point;
  r.truncation = family.truncation;

  std::vector<QPoly> polys;
  for (const auto& p : char_polys(family)) polys.push_back(at_point(p, point));
  const auto& es = family.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const bool repeated = has_repeated_root(polys[i]);
    if (mode == SimplicityMode::Real) {
      if (es[i].type != TypeClass::Quaternionic && repeated) r.ri2.push_back(es[i].id);
      if (es[i].type == TypeClass::Quaternionic) {
        const QPoly monic = polys[i].monic();
        const QPoly square_free = QPoly::divmod(monic, gcd(monic, monic.derivative())).first.monic();
        if (!(square_free * square_free == monic)) r.ri3.push_back(es[i].id);
      }
    } else {
      if (repeated) r.ci1.push_back(es[i].id);
      if (es[i].type != TypeClass::Real) r.ci2.push_back(es[i].id);
    }
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!shares_root(polys[i], polys[j])) continue;
      if (mode == SimplicityMode::Complex)
        r.ci3.emplace_back(es[i].id, es[j].id);
      else if (!pair_is_dual(es[i], es[j]))
        r.ri1.emplace_back(es[i].id, es[j].id);
    }
  }
  return r;
}

RepresentationFamily su2f_family(int kmax) {
  RepresentationFamily f;
  f.name = "su2f";
  f.parameters = {"a", "b"};
  f.truncation = "V_k, 0 <= k <= " + std::to_string(kmax);
  for (int k = 0; k <= kmax; ++k) {
    const auto fs = fixed_space(k);
    if (fs.dimension() == 0) continue;
    std::vector<MultiPoly> diag;
    for (int d : fs.basis_d) {
      const auto form = two_param_eigenvalue(k, d);
      const std::vector<Rational> coeffs{form.a_coeff, form.b_coeff};
      diag.push_back(MultiPoly::linear(f.parameters, coeffs));
    }
    const std::string id = "V" + std::to_string(k);
    f.entries.push_back({id, TypeClass::Real, id, ParametricMatrix::diagonal(diag)});
  }
  return f;
}

RepresentationFamily hopf_family(int n, int bound) {
  RepresentationFamily f;
  f.name = "hopf";
  f.parameters = {"gamma1", "gamma2"};
  f.truncation = "(p,q), p + q <= " + std::to_string(bound) + ", n = " + std::to_string(n);
  auto id = [](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
  for (int p = 0; p <= bound; ++p)
    for (int q = 0; p + q <= bound; ++q) {
      const auto form = parametric_eigenvalue(hopf_eigenvalue(n, p, q));
      const std::vector<Rational> coeffs{form.gamma1, form.gamma2};
      f.entries.push_back({id(p, q), p == q ? TypeClass::Real : TypeClass::Complex, id(q, p),
                           ParametricMatrix::diagonal({MultiPoly::linear(f.parameters, coeffs)})});
    }
  return f;
}

}  // namespace casimir
