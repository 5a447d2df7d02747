#include "casimir/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace casimir {

UniPoly::UniPoly(std::vector<MultiPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::linear_factor(const MultiPoly& root) {
  return UniPoly({-root, MultiPoly::constant(root.variables(), Rational(1))});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const MultiPoly& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

MultiPoly UniPoly::coefficient(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : MultiPoly();
}

std::vector<std::string> UniPoly::variables() const {
  for (const auto& c : coeffs_)
    if (!c.variables().empty()) return c.variables();
  return {};
}

std::vector<Rational> UniPoly::evaluate_parameters(std::span<const Rational> point) const {
  const auto vars = variables();
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.variables().empty())
      out.push_back(c.constant_term());
    else
      out.push_back(c.extend_to(vars).evaluate(point));
  }
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<MultiPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

std::string UniPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    if (coeffs_[d].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[d].str() << ")";
    if (d >= 1) os << "*" << var;
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

UniPoly derivative(const UniPoly& p, unsigned order) {
  if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
  std::vector<MultiPoly> c = p.coefficients();
  for (unsigned step = 0; step < order; ++step) {
    if (c.empty()) break;
    std::vector<MultiPoly> next;
    for (std::size_t d = 1; d < c.size(); ++d) next.push_back(c[d] * Rational(static_cast<long>(d)));
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

namespace {

// Coefficients of det(t·Id - a), highest degree first (c[0] == 1).
std::vector<MultiPoly> berkowitz(const ParametricMatrix& a) {
  const std::size_t n = a.dim();
  const auto one = MultiPoly::constant(Rational(1));
  if (n == 0) return {one};
  std::vector<MultiPoly> c{one, -a.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<MultiPoly> col(r + 2);
    col[0] = one;
    col[1] = -a.at(r, r);
    std::vector<MultiPoly> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = a.at(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      MultiPoly dot;
      for (std::size_t i = 0; i < r; ++i) dot += a.at(r, i) * x[i];
      col[k] = -dot;
      if (k == r + 1) break;
      std::vector<MultiPoly> ax(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) ax[i] += a.at(i, j) * x[j];
      x = std::move(ax);
    }
    std::vector<MultiPoly> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += col[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

}  // namespace

UniPoly char_poly(const ParametricMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
  auto c = berkowitz(m);
  return UniPoly(std::vector<MultiPoly>(c.rbegin(), c.rend()));
}

MultiPoly determinant(const ParametricMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  auto c = berkowitz(m);
  MultiPoly d = c.back();
  if (m.dim() % 2 == 1) d = -d;
  return d;
}

MultiPoly resultant(const UniPoly& p, const UniPoly& q) {
  const auto dp = p.degree();
  const auto dq = q.degree();
  const bool p_const = !dp || *dp == 0;
  const bool q_const = !dq || *dq == 0;
  if (p_const && q_const) throw std::invalid_argument("resultant: both polynomials constant in t");
  if (!dp || !dq) return MultiPoly();
  const std::size_t m = *dp;
  const std::size_t n = *dq;
  const std::size_t size = m + n;
  std::vector<MultiPoly> values(size * size);
  // Rows 0..n-1 carry p, rows n..n+m-1 carry q; coefficients run from the
  // leading term leftwards.
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) values[row * size + row + i] = p.coefficient(m - i);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i) values[(n + row) * size + row + i] = q.coefficient(n - i);
  return determinant(ParametricMatrix(size, size, std::move(values)));
}

// ---------------------------------------------------------------------------

QPoly::QPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> QPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

Rational QPoly::evaluate(const Rational& t) const {
  Rational acc(0);
  for (std::size_t d = c_.size(); d-- > 0;) acc = acc * t + c_[d];
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t d = 1; d < c_.size(); ++d) out.push_back(c_[d] * Rational(static_cast<long>(d)));
  return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> out = c_;
  const Rational lead = c_.back();
  for (auto& x : out) x /= lead;
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;
  if (rem.size() < b.c_.size()) return {QPoly(), a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Rational f = rem[k] / b.c_.back();
    quot[k - db] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  rem.resize(db);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    auto r = QPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace casimir
