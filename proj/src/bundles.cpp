#include "casimir/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "casimir/parallel.hpp"
#include "casimir/symmdata.hpp"

namespace casimir {

namespace {

void check_weight(int n, std::int64_t p, std::int64_t q) {
  if (n < 1) throw std::invalid_argument("Hopf fibration needs n >= 1");
  if (p < 0 || q < 0) throw std::invalid_argument("spherical weight coefficients must be non-negative");
}

std::int64_t alpha_i(int n, std::int64_t p, std::int64_t q) { return -std::int64_t{n} * n * (q - p) * (q - p); }

std::int64_t freudenthal_i(int n, std::int64_t p, std::int64_t q) {
  return n * (p * p + q * q) + 2 * p * q + n * (p + q);
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool recovers(const HopfInvariantPair& xy) {
  const std::int64_t s = xy.x * xy.x + xy.y * xy.y;
  const std::int64_t t = xy.x * xy.y;
  const std::int64_t u = isqrt(s + 2 * t);
  const std::int64_t v = isqrt(s - 2 * t);
  if (u * u != s + 2 * t || v * v != s - 2 * t) return false;
  const std::int64_t big = (u + v) / 2;
  const std::int64_t small = (u - v) / 2;
  return big == std::max(xy.x, xy.y) && small == std::min(xy.x, xy.y);
}

}  // namespace

BundleEigenvalue hopf_eigenvalue(int n, std::int64_t p, std::int64_t q) {
  check_weight(n, p, q);
  return {Rational(static_cast<long long>(alpha_i(n, p, q))), Rational(static_cast<long long>(freudenthal_i(n, p, q))),
          {p, q}};
}

ParametricEigenvalue parametric_eigenvalue(const BundleEigenvalue& e) { return {e.alpha, e.freudenthal - e.alpha}; }

HopfInvariantPair hopf_invariants(int n, std::int64_t p, std::int64_t q) {
  check_weight(n, p, q);
  return {2 * (n + 1) * p + n, 2 * (n + 1) * q + n};
}

bool collision_system_direct(int n, HopfWeight a, HopfWeight b) {
  check_weight(n, a.p, a.q);
  check_weight(n, b.p, b.q);
  return alpha_i(n, a.p, a.q) == alpha_i(n, b.p, b.q) && freudenthal_i(n, a.p, a.q) == freudenthal_i(n, b.p, b.q);
}

bool collision_system_check(int n, HopfWeight a, HopfWeight b) {
  const auto u = hopf_invariants(n, a.p, a.q);
  const auto v = hopf_invariants(n, b.p, b.q);
  return u.x * u.x + u.y * u.y == v.x * v.x + v.y * v.y && u.x * u.y == v.x * v.y;
}

HopfScanReport hopf_swap_theorem_scan(int n, std::int64_t bound) {
  if (n < 2) throw std::invalid_argument("the swap theorem needs n >= 2");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  HopfScanReport report;
  report.n = n;
  report.bound = bound;

  const std::int64_t side = bound + 1;
  struct Row {
    std::int64_t alpha, freud, sum_sq, prod;
  };
  std::vector<Row> rows(static_cast<std::size_t>(side * side));
  for (std::int64_t p = 0; p <= bound; ++p)
    for (std::int64_t q = 0; q <= bound; ++q) {
      const auto xy = hopf_invariants(n, p, q);
      rows[static_cast<std::size_t>(p * side + q)] = {alpha_i(n, p, q), freudenthal_i(n, p, q),
                                                      xy.x * xy.x + xy.y * xy.y, xy.x * xy.y};
      if (!recovers(xy)) ++report.recovery_failures;
    }

  std::mutex merge;
  run_sharded(static_cast<std::size_t>(side), [&](std::size_t shard) {
    const auto p = static_cast<std::int64_t>(shard);
    std::uint64_t checked = 0, disagree = 0;
    std::vector<HopfCollision> found;
    for (std::int64_t q = 0; q <= bound; ++q) {
      const Row& a = rows[static_cast<std::size_t>(p * side + q)];
      for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        const Row& b = rows[idx];
        const bool direct = a.alpha == b.alpha && a.freud == b.freud;
        const bool reduced = a.sum_sq == b.sum_sq && a.prod == b.prod;
        ++checked;
        if (direct != reduced) ++disagree;
        const HopfWeight wa{p, q};
        const HopfWeight wb{static_cast<std::int64_t>(idx) / side, static_cast<std::int64_t>(idx) % side};
        if (direct && wa < wb) found.push_back({wa, wb, wb.p == wa.q && wb.q == wa.p});
      }
    }
    std::lock_guard lock(merge);
    report.ordered_pairs_checked += checked;
    report.disagreements += disagree;
    report.collisions.insert(report.collisions.end(), found.begin(), found.end());
  });

  std::sort(report.collisions.begin(), report.collisions.end(),
            [](const HopfCollision& l, const HopfCollision& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
  for (const auto& c : report.collisions) {
    if (c.swap)
      ++report.swap_collisions;
    else
      report.non_swap.push_back(c);
  }
  return report;
}

BundleCase bundle_case(const std::string& name, int m, int n) {
  BundleCase c;
  c.name = name;
  c.m = m;
  c.n = n;
  if (name == "B1") {
    if (m < 1 || n < 1) throw std::invalid_argument("B1 needs m, n >= 1");
    const int lo = std::min(m, n);
    const int hi = std::max(m, n);
    c.total_space = "SU(" + std::to_string(m + n) + ")/SU(" + std::to_string(m) + ")xSU(" + std::to_string(n) + ")";
    c.base = "SU(" + std::to_string(m + n) + ")/S(U(" + std::to_string(n) + ")xU(" + std::to_string(m) + "))";
    const auto d = lo == hi ? describe(SpaceLabel::AIII_2, {std::nullopt, lo})
                            : describe(SpaceLabel::AIII_1, {lo + hi - 1, lo});
    c.base_label = describe_params(d);
    c.base_rank = d.rank;
  } else if (name == "B2") {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("B2 needs odd n >= 3");
    c.total_space = "SO(" + std::to_string(2 * n) + ")/SU(" + std::to_string(n) + ")";
    c.base = "SO(" + std::to_string(2 * n) + ")/U(" + std::to_string(n) + ")";
    const auto d = describe(SpaceLabel::DIII_2, {std::nullopt, (n - 1) / 2});
    c.base_label = describe_params(d);
    c.base_rank = d.rank;
  } else if (name == "B3") {
    c.total_space = "E6/D5";
    c.base = "E6/(U(1)xD5)";
    const auto d = describe(SpaceLabel::EIII, {});
    c.base_label = describe_params(d);
    c.base_rank = d.rank;
  } else {
    throw std::invalid_argument("unknown bundle case '" + name + "'");
  }
  c.base_simple = c.base_rank == 1;
  if (!c.base_simple)
    c.note = "base has rank " + std::to_string(c.base_rank) + ", is not G-simple, so neither is the total space";
  else if (name == "B1")
    c.note = "Hopf fibration S^" + std::to_string(2 * n + 1) + " -> CP^" + std::to_string(n) + "; see the Hopf scan";
  else
    c.note = "doubly covered by SU(4)/SU(3) = S^7; genericity descends from the Hopf case (no separate computation)";
  return c;
}

std::vector<BundleCase> bundle_case_notes() {
  return {bundle_case("B1", 1, 2), bundle_case("B1", 1, 4), bundle_case("B1", 2, 3), bundle_case("B1", 3, 3),
          bundle_case("B2", 0, 3), bundle_case("B2", 0, 5), bundle_case("B2", 0, 7), bundle_case("B3")};
}

}  // namespace casimir
