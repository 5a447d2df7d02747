#include "casimir/witness.hpp"

#include <stdexcept>

namespace casimir {

namespace {

constexpr std::size_t kMaxDualityRetries = 64;

std::vector<Rational> to_rational(const std::vector<std::int64_t>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

std::optional<DominantWeight> integral_dominant(const std::vector<Rational>& v) {
  DominantWeight w;
  for (const auto& c : v) {
    if (!c.is_integer() || c.sign() < 0 || !c.numerator().fits_slong_p()) return std::nullopt;
    w.coeffs.push_back(c.numerator().get_si());
  }
  return w;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> witness_indices(const RestrictedDatum& datum) {
  const std::size_t n = datum.two_delta_bar.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (datum.two_delta_bar[i] == datum.two_delta_bar[j] && datum.cartan.norms[i] == datum.cartan.norms[j])
        return std::pair{i, j};
  return std::nullopt;
}

std::vector<Rational> reflect(const RationalMatrix& gram, const std::vector<Rational>& alpha,
                              const std::vector<Rational>& v) {
  const Rational f = Rational(2) * inner(gram, alpha, v) / inner(gram, alpha, alpha);
  std::vector<Rational> out = v;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= f * alpha[k];
  return out;
}

ReflectionWitness reflection_witness(const RestrictedDatum& datum) {
  const std::size_t n = static_cast<std::size_t>(datum.rank());
  if (n < 3) throw std::domain_error("reflection_witness needs rank >= 3");
  const auto idx = witness_indices(datum);
  if (!idx) throw std::domain_error(describe_params(datum.descriptor) + ": no pair with equal 2δ̄ coefficient and norm");
  const auto [i, j] = *idx;

  ReflectionCertificate cert;
  cert.index_i = i;
  cert.index_j = j;

  // β_i - β_j in M-coordinates is half the difference of Cartan rows; clear
  // denominators and divide out the content.
  std::vector<Rational> half(n);
  Integer den(1);
  for (std::size_t k = 0; k < n; ++k) {
    half[k] = Rational(datum.cartan.cartan[i][k] - datum.cartan.cartan[j][k], 2);
    den = lcm(den, half[k].denominator());
  }
  Integer content(0);
  for (std::size_t k = 0; k < n; ++k) content = gcd(content, (half[k] * Rational(den)).numerator());
  std::vector<Rational> alpha(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Integer a = (half[k] * Rational(den)).numerator() / content;
    cert.alpha.push_back(a);
    alpha[k] = Rational(a);
  }
  cert.alpha_norm = inner(datum.gram, alpha, alpha);
  std::vector<Rational> delta_bar(n);
  for (std::size_t k = 0; k < n; ++k) delta_bar[k] = datum.two_delta_bar[k] / Rational(2);
  cert.alpha_dot_delta = inner(datum.gram, alpha, delta_bar);

  std::vector<Rational> m_i(n);
  m_i[i] = Rational(1);
  const Rational alpha_dot_mi = inner(datum.gram, alpha, m_i);
  cert.m.assign(n, 0);
  cert.m[i] = 1;
  cert.m_lower_bounds.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    cert.m_lower_bounds[k] = Rational(2) * alpha_dot_mi * alpha[k] / cert.alpha_norm;
    const Integer c = cert.m_lower_bounds[k].ceil();
    cert.m[k] = c > 0 ? c.get_si() : 0;
  }
  std::size_t first_free = 0;
  while (first_free == i || first_free == j) ++first_free;

  const auto form = eigenvalue_form(datum);
  for (cert.duality_retries = 0; cert.duality_retries <= kMaxDualityRetries; ++cert.duality_retries) {
    const auto v0 = to_rational(cert.m);
    const auto w0 = reflect(datum.gram, alpha, v0);
    Integer mult(1);
    for (const auto& c : w0) mult = lcm(mult, c.denominator());
    std::vector<Rational> v(n), w(n);
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = v0[k] * Rational(mult);
      w[k] = w0[k] * Rational(mult);
    }
    const auto vd = integral_dominant(v);
    const auto wd = integral_dominant(w);
    cert.multiplier = mult;
    cert.fixes_delta = cert.alpha_dot_delta.is_zero() && reflect(datum.gram, alpha, delta_bar) == delta_bar;
    cert.both_dominant = vd.has_value() && wd.has_value();
    if (!cert.both_dominant) throw std::logic_error("reflection_witness: image left the dominant cone");
    cert.distinct = *vd != *wd;
    cert.non_dual = dual_weight(datum, *vd) != *wd;
    const Rational ev = eigenvalue(form, *vd);
    cert.equal_eigenvalues = ev == eigenvalue(form, *wd);
    if (cert.distinct && cert.non_dual) return {{*vd, *wd, ev, false}, cert};
    ++cert.m[first_free];
  }
  throw std::domain_error(describe_params(datum.descriptor) + ": could not break duality");
}

}  // namespace casimir
