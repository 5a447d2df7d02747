#include "casimir/su2f.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "casimir/candidates.hpp"
#include "casimir/rootsys.hpp"

namespace casimir {

namespace {

int mod12(long e) { return static_cast<int>(((e % 12) + 12) % 12); }

}  // namespace

// ---------------------------------------------------------------------------
// Cyclo12

Cyclo12 Cyclo12::root(long e) {
  Cyclo12 z;
  z.c_[1] = Rational(1);
  Cyclo12 out(Rational(1));
  for (int i = 0; i < mod12(e); ++i) out = out * z;
  return out;
}

bool Cyclo12::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Cyclo12& Cyclo12::operator+=(const Cyclo12& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo12& Cyclo12::operator-=(const Cyclo12& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo12 operator*(const Cyclo12& a, const Cyclo12& b) {
  std::array<Rational, 7> prod{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  // ζ⁴ = ζ² - 1
  for (std::size_t d = 6; d >= 4; --d) {
    prod[d - 2] += prod[d];
    prod[d - 4] -= prod[d];
  }
  Cyclo12 out;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] = prod[i];
  return out;
}

Cyclo12 Cyclo12::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo12: inverse of zero");
  // Solve (multiplication by *this) · z = 1.
  RationalMatrix m(4, std::vector<Rational>(4));
  for (std::size_t j = 0; j < 4; ++j) {
    Cyclo12 basis;
    basis.c_[j] = Rational(1);
    const Cyclo12 col = *this * basis;
    for (std::size_t i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  const auto inv = casimir::inverse(m);
  Cyclo12 out;
  for (std::size_t i = 0; i < 4; ++i) out.c_[i] = inv[i][0];
  return out;
}

std::string Cyclo12::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Group

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  // Row r of a has its entry in column col(r); row col(r) of b continues it.
  auto col = [](const MonomialMatrix& m, int r) { return m.swap ? 1 - r : r; };
  auto exp = [](const MonomialMatrix& m, int r) { return r == 0 ? m.e1 : m.e2; };
  MonomialMatrix c;
  c.swap = a.swap != b.swap;
  c.e1 = mod12(exp(a, 0) + exp(b, col(a, 0)));
  c.e2 = mod12(exp(a, 1) + exp(b, col(a, 1)));
  return c;
}

MonomialMatrix sigma_generator() { return {false, 2, 10}; }
MonomialMatrix tau_generator() { return {true, 3, 3}; }

std::vector<MonomialMatrix> generate_group(const std::vector<MonomialMatrix>& generators) {
  std::set<MonomialMatrix> seen{MonomialMatrix::identity()};
  std::vector<MonomialMatrix> frontier{MonomialMatrix::identity()};
  while (!frontier.empty()) {
    std::vector<MonomialMatrix> next;
    for (const auto& g : frontier)
      for (const auto& s : generators) {
        const auto h = g * s;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

MonomialImage act(const MonomialMatrix& g, int k, int ell) {
  if (ell < 0 || ell > k) throw std::out_of_range("monomial index out of range");
  // z1 -> ζ^e1 z_col(0), z2 -> ζ^e2 z_col(1)
  const int phase = mod12(static_cast<long>(ell) * g.e1 + static_cast<long>(k - ell) * g.e2);
  return {g.swap ? k - ell : ell, phase};
}

// ---------------------------------------------------------------------------
// Fixed space

namespace {

CycloVector apply(const MonomialMatrix& g, int k, const CycloVector& v) {
  CycloVector out;
  for (const auto& [ell, c] : v) {
    const auto img = act(g, k, ell);
    out[img.target] += c * Cyclo12::root(img.phase);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

CycloVector normalized(const CycloVector& v) {
  const Cyclo12 inv = v.begin()->second.inverse();
  CycloVector out;
  for (const auto& [ell, c] : v) out[ell] = c * inv;
  return out;
}

}  // namespace

FixedSpaceBasis fixed_space(int k) {
  if (k < 0) throw std::invalid_argument("fixed_space: k must be >= 0");
  const auto sigma = sigma_generator();
  const auto tau = tau_generator();
  const auto group = generate_group({sigma, tau});
  if (group.size() != 12) throw std::logic_error("generated group has order " + std::to_string(group.size()));

  FixedSpaceBasis out;
  out.k = k;
  out.group_order = group.size();
  const Cyclo12 weight(Rational(1, static_cast<long>(group.size())));
  std::map<int, CycloVector> echelon;  // pivot index -> row with coefficient 1 there
  for (int ell = 0; ell <= k; ++ell) {
    CycloVector avg;
    for (const auto& g : group) {
      const auto img = act(g, k, ell);
      avg[img.target] += weight * Cyclo12::root(img.phase);
    }
    std::erase_if(avg, [](const auto& kv) { return kv.second.is_zero(); });
    CycloVector reduced = avg;
    while (!reduced.empty()) {
      const auto it = echelon.find(reduced.begin()->first);
      if (it == echelon.end()) break;
      const Cyclo12 f = reduced.begin()->second;
      for (const auto& [idx, c] : it->second) reduced[idx] -= f * c;
      std::erase_if(reduced, [](const auto& kv) { return kv.second.is_zero(); });
    }
    if (reduced.empty()) continue;
    const auto row = normalized(reduced);
    echelon[row.begin()->first] = row;
    out.basis.push_back(normalized(avg));
  }

  std::set<int> ds;
  for (const auto& v : out.basis) {
    if (apply(sigma, k, v) != v || apply(tau, k, v) != v)
      throw std::logic_error("averaged vector is not fixed by the generators");
    const int d = std::abs(2 * v.begin()->first - k);
    for (const auto& [ell, c] : v)
      if (std::abs(2 * ell - k) != d) throw std::logic_error("basis vector mixes H² eigenvalues");
    out.basis_d.push_back(d);
    ds.insert(d);
  }
  out.ell_values.assign(ds.begin(), ds.end());
  return out;
}

std::size_t predicted_dimension(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  std::size_t dim = 0;
  for (int ell = 0; 2 * ell <= k; ++ell) {
    if ((2 * ell - k) % 6 != 0) continue;
    if (2 * ell == k && k % 4 != 0) continue;
    ++dim;
  }
  return dim;
}

TwoParamEigenvalue two_param_eigenvalue(int k, int d) {
  const Rational d2(static_cast<long>(d) * d);
  return {k, d, -d2 / Rational(8), (Rational(static_cast<long>(k) * (k + 2)) + d2) / Rational(8)};
}

std::vector<TwoParamEigenvalue> eigenvalue_forms(int k) {
  const auto fs = fixed_space(k);
  if (fs.dimension() == 0) throw std::invalid_argument("V_" + std::to_string(k) + "^F is zero");
  std::vector<TwoParamEigenvalue> out;
  for (int d : fs.ell_values) out.push_back(two_param_eigenvalue(k, d));
  return out;
}

std::vector<FormCollision> collisions_at(const std::vector<TwoParamEigenvalue>& forms, const Rational& a,
                                         const Rational& b) {
  std::map<Rational, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < forms.size(); ++i) groups[forms[i].at(a, b)].push_back(i);
  std::vector<FormCollision> out;
  for (const auto& [value, idx] : groups)
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) out.push_back({forms[idx[x]], forms[idx[y]], value});
  return out;
}

Su2fCertificate simplicity_certificate(int kmax, std::optional<std::pair<Rational, Rational>> metric) {
  if (kmax < 2) throw std::invalid_argument("simplicity_certificate: kmax must be >= 2");
  Su2fCertificate cert;
  cert.kmax = kmax;
  cert.oracle_agrees = true;
  cert.odd_k_vanish = true;
  cert.within_k_distinct = true;
  std::vector<std::vector<TwoParamEigenvalue>> per_k;
  for (int k = 0; k <= kmax; ++k) {
    const auto fs = fixed_space(k);
    cert.dimensions.push_back(fs.dimension());
    if (fs.dimension() != predicted_dimension(k)) cert.oracle_agrees = false;
    if (k % 2 == 1 && fs.dimension() != 0) cert.odd_k_vanish = false;
    if (fs.dimension() == 0) continue;
    std::vector<TwoParamEigenvalue> forms;
    for (int d : fs.basis_d) forms.push_back(two_param_eigenvalue(k, d));
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = i + 1; j < forms.size(); ++j)
        if (forms[i].same_form(forms[j])) cert.within_k_distinct = false;
    for (int d : fs.ell_values) cert.forms.push_back(two_param_eigenvalue(k, d));
  }
  cert.cross_k_injective = true;
  for (std::size_t i = 0; i < cert.forms.size(); ++i)
    for (std::size_t j = i + 1; j < cert.forms.size(); ++j)
      if (cert.forms[i].same_form(cert.forms[j])) cert.cross_k_injective = false;
  if (metric) {
    if (metric->first.sign() <= 0 || metric->second.sign() <= 0)
      throw std::invalid_argument("metric parameters must be positive");
    cert.metric = metric;
    cert.metric_collisions = collisions_at(cert.forms, metric->first, metric->second);
  }
  return cert;
}

std::optional<std::pair<Rational, Rational>> search_metric(int kmax, std::size_t max_level) {
  const auto base = simplicity_certificate(kmax);
  const auto seq = candidate_sequence(max_level + 1);
  for (std::size_t level = 1; level <= max_level; ++level)
    for (const auto& idx : level_indices(2, level)) {
      if (idx[0] == idx[1]) continue;
      const Rational a(seq[idx[0]]);
      const Rational b(seq[idx[1]]);
      if (collisions_at(base.forms, a, b).empty()) return std::pair{a, b};
    }
  return std::nullopt;
}

}  // namespace casimir
