#include "casimir/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace casimir {

namespace {

const std::vector<std::string>& common_variables(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() == b.variables() || b.variables().empty()) return a.variables();
  if (a.variables().empty()) return b.variables();
  throw std::invalid_argument("polynomials over different parameter lists");
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  Exponents e(variables.size(), 0);
  e[static_cast<std::size_t>(it - variables.begin())] = 1;
  MultiPoly p(std::move(variables));
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::linear(std::vector<std::string> variables, std::span<const Rational> coeffs,
                            const Rational& offset) {
  if (coeffs.size() != variables.size())
    throw std::invalid_argument("linear form: coefficient count mismatch");
  MultiPoly p(std::move(variables));
  const std::size_t n = p.vars_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  p.add_term(Exponents(n, 0), offset);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

unsigned MultiPoly::degree_in(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong arity");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= pow(point[i], e[i]);
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rational& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return *this;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[idx] = 0;
    out.add_term(reduced, c * pow(value, e[idx]));
  }
  return out;
}

MultiPoly MultiPoly::extend_to(const std::vector<std::string>& variables) const {
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it == variables.end())
      throw std::invalid_argument("cannot extend: variable '" + vars_[i] + "' missing");
    where[i] = static_cast<std::size_t>(it - variables.begin());
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

void MultiPoly::unify_with(MultiPoly& other) {
  const auto vars = common_variables(*this, other);
  if (vars_ != vars) *this = extend_to(vars);
  if (other.vars_ != vars) other = other.extend_to(vars);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  MultiPoly rhs = o;
  unify_with(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  MultiPoly rhs = o;
  unify_with(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly lhs = a;
  MultiPoly rhs = b;
  lhs.unify_with(rhs);
  MultiPoly out(lhs.vars_);
  const std::size_t n = lhs.vars_.size();
  Exponents e(n);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
  try {
    MultiPoly diff = a - b;
    return diff.is_zero();
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then lexicographically descending exponents.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = 0, dy = 0;
    for (auto v : x.first) dx += v;
    for (auto v : y.first) dy += v;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool monomial_empty = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool wrote = false;
    if (mag != Rational(1) || monomial_empty) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly out = MultiPoly::constant(base.variables(), Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

ParametricMatrix::ParametricMatrix(std::size_t r, std::size_t c, std::vector<MultiPoly> values)
    : rows(r), cols(c), entries(std::move(values)) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

ParametricMatrix ParametricMatrix::diagonal(const std::vector<MultiPoly>& diag) {
  const std::size_t n = diag.size();
  std::vector<MultiPoly> values(n * n);
  for (std::size_t i = 0; i < n; ++i) values[i * n + i] = diag[i];
  return ParametricMatrix(n, n, std::move(values));
}

}  // namespace casimir
