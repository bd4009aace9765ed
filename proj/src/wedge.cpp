#include "fermat/wedge.hpp"

namespace fermat {

namespace {

void check_range(int i, int j, int n, const char* what) {
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
    throw std::invalid_argument(std::string(what) +
                                ": index outside [1, n-1]");
}

std::pair<int, int> basis_pair(std::size_t pos, int n) {
  return {int(pos / (n - 1)) + 1, int(pos % (n - 1)) + 1};
}

}  // namespace

std::vector<WedgeIndex> index_set(int n) {
  if (n < 3) throw std::invalid_argument("index_set: n must be >= 3");
  std::vector<WedgeIndex> out;
  out.reserve(wedge_rank(n));
  const std::size_t d = h1u_rank(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      auto [i1, j1] = basis_pair(a, n);
      auto [i2, j2] = basis_pair(b, n);
      out.push_back(WedgeIndex{i1, j1, i2, j2});
    }
  return out;
}

std::optional<CanonicalTerm> canonical_term(int i1, int j1, int i2, int j2,
                                            Int c, int n) {
  check_range(i1, j1, n, "canonical_term");
  check_range(i2, j2, n, "canonical_term");
  if (i1 == i2 && j1 == j2) return std::nullopt;
  if (std::pair(i1, j1) > std::pair(i2, j2)) {
    std::swap(i1, i2);
    std::swap(j1, j2);
    c = -c;
  }
  return CanonicalTerm{WedgeIndex{i1, j1, i2, j2}, std::move(c)};
}

void WedgeElt::add_term(int i1, int j1, int i2, int j2, Int c) {
  if (c == 0) return;
  auto t = canonical_term(i1, j1, i2, j2, std::move(c), n_);
  if (!t) return;
  Int& slot = terms_[t->index];
  slot += t->coeff;
  if (slot == 0) terms_.erase(t->index);
}

WedgeElt& WedgeElt::operator+=(const WedgeElt& o) {
  if (n_ != o.n_) throw std::invalid_argument("WedgeElt: degree mismatch");
  for (const auto& [idx, c] : o.terms_) {
    Int& slot = terms_[idx];
    slot += c;
    if (slot == 0) terms_.erase(idx);
  }
  return *this;
}

WedgeElt& WedgeElt::operator-=(const WedgeElt& o) {
  if (n_ != o.n_) throw std::invalid_argument("WedgeElt: degree mismatch");
  for (const auto& [idx, c] : o.terms_) {
    Int& slot = terms_[idx];
    slot -= c;
    if (slot == 0) terms_.erase(idx);
  }
  return *this;
}

std::vector<Int> WedgeElt::coords() const {
  const std::size_t d = h1u_rank(n_);
  std::vector<Int> out(wedge_rank(n_));
  for (const auto& [idx, c] : terms_) {
    const std::size_t a = e_basis_index(idx.i1, idx.j1, n_);
    const std::size_t b = e_basis_index(idx.i2, idx.j2, n_);
    // position of pair (a, b), a < b, in lexicographic pair order
    const std::size_t pos = a * d - a * (a + 1) / 2 + (b - a - 1);
    out[pos] = c;
  }
  return out;
}

WedgeElt WedgeElt::from_coords(int n, std::span<const Int> v) {
  if (v.size() != wedge_rank(n))
    throw std::invalid_argument("from_coords: wrong length");
  WedgeElt out(n);
  std::size_t pos = 0;
  const std::size_t d = h1u_rank(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b, ++pos) {
      if (v[pos] == 0) continue;
      auto [i1, j1] = basis_pair(a, n);
      auto [i2, j2] = basis_pair(b, n);
      out.add_term(i1, j1, i2, j2, v[pos]);
    }
  return out;
}

WedgeElt wedge_of_classes(const H1UClass& x, const H1UClass& y) {
  if (x.n != y.n) throw std::invalid_argument("wedge: degree mismatch");
  const int n = x.n;
  const std::size_t d = h1u_rank(n);
  WedgeElt out(n);
  for (std::size_t a = 0; a < d; ++a) {
    if (x.coords[a] == 0) continue;
    auto [i1, j1] = basis_pair(a, n);
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b || y.coords[b] == 0) continue;
      auto [i2, j2] = basis_pair(b, n);
      out.add_term(i1, j1, i2, j2, x.coords[a] * y.coords[b]);
    }
  }
  return out;
}

Submodule wedge_kernel(int n) {
  if (n < 3) throw std::invalid_argument("wedge_kernel: n must be >= 3");
  const std::size_t d = h1u_rank(n);
  const std::size_t ambient = wedge_rank(n);
  IntMatrix gens(std::size_t(n - 1) * d, ambient);
  std::size_t row = 0;
  for (int g = 1; g < n; ++g) {
    H1UClass s = to_e_coordinates(gamma(g, n));
    for (std::size_t b = 0; b < d; ++b, ++row) {
      H1UClass basis{n, std::vector<Int>(d)};
      basis.coords[b] = 1;
      std::vector<Int> v = wedge_of_classes(s, basis).coords();
      for (std::size_t c = 0; c < ambient; ++c) gens.at(row, c) = v[c];
    }
  }
  return Submodule(ambient, std::move(gens));
}

WedgeElt apply_induced(const IntMatrix& m, const WedgeElt& w) {
  const int n = w.degree();
  const std::size_t d = h1u_rank(n);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("apply_induced: size mismatch");
  WedgeElt out(n);
  for (const auto& [idx, c] : w.terms()) {
    const std::size_t a = e_basis_index(idx.i1, idx.j1, n);
    const std::size_t b = e_basis_index(idx.i2, idx.j2, n);
    for (std::size_t u = 0; u < d; ++u) {
      if (m.at(a, u) == 0) continue;
      auto [i1, j1] = basis_pair(u, n);
      for (std::size_t v = 0; v < d; ++v) {
        if (u == v || m.at(b, v) == 0) continue;
        auto [i2, j2] = basis_pair(v, n);
        out.add_term(i1, j1, i2, j2, c * m.at(a, u) * m.at(b, v));
      }
    }
  }
  return out;
}

IntMatrix induced_wedge_matrix(const IntMatrix& m, int n) {
  const std::size_t d = h1u_rank(n);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("induced_wedge_matrix: size mismatch");
  const std::size_t ambient = wedge_rank(n);
  IntMatrix out(ambient, ambient);
  std::size_t row = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b, ++row) {
      WedgeElt w(n);
      auto [i1, j1] = basis_pair(a, n);
      auto [i2, j2] = basis_pair(b, n);
      w.add_term(i1, j1, i2, j2, 1);
      std::vector<Int> v = apply_induced(m, w).coords();
      for (std::size_t c = 0; c < ambient; ++c) out.at(row, c) = v[c];
    }
  return out;
}

ModMatrix mod_induced_wedge_matrix(const ModMatrix& m, std::size_t dim) {
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("mod_induced_wedge_matrix: size mismatch");
  const std::uint64_t p = m.modulus();
  const std::size_t ambient = dim * (dim - 1) / 2;
  auto pair_pos = [dim](std::size_t a, std::size_t b) {
    return a * dim - a * (a + 1) / 2 + (b - a - 1);
  };
  ModMatrix out(p, ambient, ambient);
  std::size_t row = 0;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b, ++row) {
      for (std::size_t u = 0; u < dim; ++u) {
        if (m.at(a, u) == 0) continue;
        for (std::size_t v = 0; v < dim; ++v) {
          if (u == v || m.at(b, v) == 0) continue;
          const std::uint64_t c = (m.at(a, u) * m.at(b, v)) % p;
          if (u < v) {
            std::uint64_t& slot = out.at(row, pair_pos(u, v));
            slot = (slot + c) % p;
          } else {
            std::uint64_t& slot = out.at(row, pair_pos(v, u));
            slot = (slot + p - c) % p;
          }
        }
      }
    }
  return out;
}

}  // namespace fermat
