#include "casimir/spectrum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "casimir/parallel.hpp"

namespace casimir {

DominantWeight::DominantWeight(std::initializer_list<std::int64_t> c) : DominantWeight(std::vector<std::int64_t>(c)) {}

DominantWeight::DominantWeight(std::vector<std::int64_t> c) : coeffs(std::move(c)) {
  for (auto v : coeffs)
    if (v < 0) throw std::invalid_argument("dominant weight coefficients must be non-negative");
}

std::string DominantWeight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ")";
  return os.str();
}

EigenvalueForm eigenvalue_form(const RestrictedDatum& datum) { return {datum.gram, datum.two_delta_bar}; }

Rational inner(const RationalMatrix& gram, const std::vector<Rational>& u, const std::vector<Rational>& v) {
  const std::size_t n = gram.size();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("inner: dimension mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    Rational row(0);
    for (std::size_t j = 0; j < n; ++j) row += gram[i][j] * v[j];
    acc += u[i] * row;
  }
  return acc;
}

Rational eigenvalue(const EigenvalueForm& form, const std::vector<Rational>& w) {
  if (w.size() != form.rank()) throw std::invalid_argument("eigenvalue: weight has wrong length");
  std::vector<Rational> shifted(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] + form.shift[i];
  return inner(form.gram, shifted, w);
}

Rational eigenvalue(const EigenvalueForm& form, const DominantWeight& w) {
  std::vector<Rational> q;
  q.reserve(w.size());
  for (auto c : w.coeffs) q.emplace_back(static_cast<long>(c));
  return eigenvalue(form, q);
}

std::vector<std::string> weight_variables(std::size_t rank) {
  if (rank == 1) return {"x"};
  if (rank == 2) return {"x", "y"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= rank; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

MultiPoly polynomial_form(const RestrictedDatum& datum, bool symbolic_r) {
  const std::size_t n = static_cast<std::size_t>(datum.rank());
  auto vars = weight_variables(n);
  const bool with_r = symbolic_r && uses_range_parameter(datum.descriptor.label);
  if (with_r) vars.push_back("r");

  std::vector<MultiPoly> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(MultiPoly::variable(vars, vars[i]));
  std::vector<MultiPoly> shift;
  if (with_r) {
    const auto r = MultiPoly::variable(vars, "r");
    for (const auto& e : two_delta_bar_row(datum.descriptor.label, datum.rank()))
      shift.push_back(MultiPoly::constant(vars, e.constant) + r * e.slope);
  } else {
    for (const auto& c : datum.two_delta_bar) shift.push_back(MultiPoly::constant(vars, c));
  }

  MultiPoly out(vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (datum.gram[i][j].is_zero()) continue;
      out += (x[i] + shift[i]) * x[j] * datum.gram[i][j];
    }
  return out;
}

DominantWeight dual_weight(const RestrictedDatum& datum, const DominantWeight& w) {
  const auto& sigma = datum.descriptor.involution;
  if (w.size() != sigma.size()) throw std::invalid_argument("dual_weight: weight has wrong length");
  DominantWeight out;
  out.coeffs.resize(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.coeffs[k] = w.coeffs[static_cast<std::size_t>(sigma[k])];
  return out;
}

namespace {

// Eigenvalue scaled by a common denominator so that it is an exact integer.
struct ScaledForm {
  Integer scale;
  std::vector<std::vector<std::int64_t>> quad;
  std::vector<std::int64_t> lin;

  explicit ScaledForm(const EigenvalueForm& f) : scale(1) {
    const std::size_t n = f.rank();
    std::vector<Rational> lin_q(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) lin_q[j] += f.shift[i] * f.gram[i][j];
    for (const auto& row : f.gram)
      for (const auto& g : row) scale = lcm(scale, g.denominator());
    for (const auto& l : lin_q) scale = lcm(scale, l.denominator());
    auto to_i64 = [&](const Rational& v) {
      const Rational s = v * Rational(scale);
      if (!s.numerator().fits_slong_p()) throw std::overflow_error("eigenvalue form coefficients too large");
      return static_cast<std::int64_t>(s.numerator().get_si());
    };
    quad.assign(n, std::vector<std::int64_t>(n));
    lin.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      lin[i] = to_i64(lin_q[i]);
      for (std::size_t j = 0; j < n; ++j) quad[i][j] = to_i64(f.gram[i][j]);
    }
  }

  std::int64_t value(const std::vector<std::int64_t>& w) const {
    __int128 acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      __int128 row = lin[i];
      for (std::size_t j = 0; j < w.size(); ++j) row += static_cast<__int128>(quad[i][j]) * w[j];
      acc += row * w[i];
    }
    if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("scaled eigenvalue exceeds 64 bits");
    return static_cast<std::int64_t>(acc);
  }
};

}  // namespace

std::vector<CollisionReport> enumerate_collisions(const RestrictedDatum& datum, std::int64_t bound,
                                                  bool exclude_dual_pairs) {
  if (bound < 1) throw std::invalid_argument("enumerate_collisions: bound must be >= 1");
  const std::size_t n = static_cast<std::size_t>(datum.rank());
  const ScaledForm form(eigenvalue_form(datum));

  const std::size_t first_values = static_cast<std::size_t>(bound) + 1;
  const std::size_t shards = std::min(first_values, 4 * worker_count());
  std::map<std::int64_t, std::vector<DominantWeight>> groups;
  std::mutex merge_mutex;

  run_sharded(shards, [&](std::size_t shard) {
    std::unordered_map<std::int64_t, std::vector<DominantWeight>> local;
    std::vector<std::int64_t> w(n, 0);
    for (std::size_t first = shard; first < first_values; first += shards) {
      w.assign(n, 0);
      w[0] = static_cast<std::int64_t>(first);
      while (true) {
        DominantWeight dw;
        dw.coeffs = w;
        local[form.value(w)].push_back(std::move(dw));
        std::size_t k = n;
        while (k > 1) {
          if (w[k - 1] < bound) {
            ++w[k - 1];
            break;
          }
          w[k - 1] = 0;
          --k;
        }
        if (k <= 1) break;
      }
    }
    std::lock_guard lock(merge_mutex);
    for (auto& [key, ws] : local) {
      auto& g = groups[key];
      g.insert(g.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
    }
  });

  std::vector<CollisionReport> out;
  for (auto& [key, ws] : groups) {
    if (ws.size() < 2) continue;
    std::sort(ws.begin(), ws.end());
    const Rational value = Rational(Integer(static_cast<long>(key))) / Rational(form.scale);
    for (std::size_t a = 0; a < ws.size(); ++a)
      for (std::size_t b = a + 1; b < ws.size(); ++b) {
        const bool dual = dual_weight(datum, ws[a]) == ws[b];
        if (dual && exclude_dual_pairs) continue;
        out.push_back({ws[a], ws[b], value, dual});
      }
  }
  std::sort(out.begin(), out.end(), [](const CollisionReport& l, const CollisionReport& r) {
    return std::tie(l.weight_a, l.weight_b) < std::tie(r.weight_a, r.weight_b);
  });
  return out;
}

}  // namespace casimir
