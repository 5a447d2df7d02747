#include "casimir/rootsys.hpp"

#include <stdexcept>

namespace casimir {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string to_string(const RootSystemType& t) {
  switch (t.family) {
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4:
    case Family::G2: return to_string(t.family);
    default: return to_string(t.family) + std::to_string(t.rank);
  }
}

Rational CartanData::inner(std::size_t i, std::size_t j) const {
  return Rational(cartan[i][j]) * norms[j] / Rational(2);
}

namespace {

void link(IntMatrix& m, std::size_t i, std::size_t j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

IntMatrix chain(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
  return m;
}

// Bourbaki E_n: 1-3-4-5-...-n with 2 attached to 4 (1-based).
IntMatrix e_type(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  link(m, 0, 2);
  link(m, 1, 3);
  for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
  return m;
}

}  // namespace

CartanData cartan_data(const RootSystemType& type) {
  const int l = type.rank;
  if (l < 1) throw std::invalid_argument("root system rank must be positive");
  CartanData d;
  d.type = type;
  d.doubled.assign(static_cast<std::size_t>(l), false);
  switch (type.family) {
    case Family::A:
      d.cartan = chain(l);
      d.norms.assign(static_cast<std::size_t>(l), Rational(2));
      break;
    case Family::B:
      // Short chain, long last node.
      if (l < 2) throw std::invalid_argument("B needs rank >= 2");
      d.cartan = chain(l);
      d.cartan[l - 1][l - 2] = -2;
      d.norms.assign(static_cast<std::size_t>(l), Rational(1));
      d.norms[l - 1] = Rational(2);
      break;
    case Family::C:
      // Long chain, short last node.
      if (l < 2) throw std::invalid_argument("C needs rank >= 2");
      d.cartan = chain(l);
      d.cartan[l - 2][l - 1] = -2;
      d.norms.assign(static_cast<std::size_t>(l), Rational(2));
      d.norms[l - 1] = Rational(1);
      break;
    case Family::BC:
      // Simple roots β_i with β_ℓ = 2γ_ℓ: same geometry as the B family.
      if (l == 1) {
        d.cartan = chain(1);
        d.norms = {Rational(2)};
      } else {
        d = cartan_data({Family::B, l});
        d.type = type;
      }
      d.doubled.assign(static_cast<std::size_t>(l), false);
      d.doubled.back() = true;
      break;
    case Family::D:
      if (l < 2) throw std::invalid_argument("D needs rank >= 2");
      if (l == 2) {
        d.cartan = {{2, 0}, {0, 2}};
      } else {
        d.cartan = chain(l);
        d.cartan[l - 2][l - 1] = d.cartan[l - 1][l - 2] = 0;
        link(d.cartan, l - 3, l - 1);
      }
      d.norms.assign(static_cast<std::size_t>(l), Rational(2));
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const int n = type.family == Family::E6 ? 6 : type.family == Family::E7 ? 7 : 8;
      if (l != n) throw std::invalid_argument(to_string(type.family) + " has fixed rank");
      d.cartan = e_type(n);
      d.norms.assign(static_cast<std::size_t>(n), Rational(2));
      break;
    }
    case Family::F4:
      if (l != 4) throw std::invalid_argument("F4 has rank 4");
      d.cartan = chain(4);
      d.cartan[1][2] = -2;  // α2 long, α3 short
      d.norms = {Rational(4), Rational(4), Rational(2), Rational(2)};
      break;
    case Family::G2:
      if (l != 2) throw std::invalid_argument("G2 has rank 2");
      d.cartan = {{2, -1}, {-3, 2}};  // α1 short, α2 long
      d.norms = {Rational(2), Rational(6)};
      break;
  }
  RationalMatrix c(static_cast<std::size_t>(l), std::vector<Rational>(static_cast<std::size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c[i][j] = Rational(d.cartan[i][j]);
  d.inverse_cartan = inverse(c);
  return d;
}

RationalMatrix gram_matrix(const CartanData& data) {
  const auto n = data.norms.size();
  RationalMatrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Rational(2) * data.inverse_cartan[i][j] * data.norms[j];
  return g;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: non-square matrix");
    inv[i][i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

CartanData permute_nodes(const CartanData& data, const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  if (n != data.norms.size()) throw std::invalid_argument("permutation has wrong length");
  CartanData out = data;
  for (std::size_t i = 0; i < n; ++i) {
    out.norms[i] = data.norms[perm[i]];
    out.doubled[i] = data.doubled[perm[i]];
    for (std::size_t j = 0; j < n; ++j) {
      out.cartan[i][j] = data.cartan[perm[i]][perm[j]];
      out.inverse_cartan[i][j] = data.inverse_cartan[perm[i]][perm[j]];
    }
  }
  return out;
}

}  // namespace casimir
