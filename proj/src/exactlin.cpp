#include "fermat/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace fermat {

namespace {

// Floor division for exact integers: result q with x - q*d in [0, |d|).
Int floor_div(const Int& x, const Int& d) {
  Int q = x / d;
  if ((x % d) != 0 && ((x < 0) != (d < 0))) --q;
  return q;
}

void sub_scaled_row(std::span<Int> dst, std::span<const Int> src,
                    const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < dst.size(); ++c) {
    if (src[c] != 0) dst[c] -= q * src[c];
  }
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t k) {
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& x = a.at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.at(k, c) != 0) out.at(r, c) += x * b.at(k, c);
      }
    }
  }
  return out;
}

std::vector<Int> vec_mat_mul(std::span<const Int> v, const IntMatrix& m) {
  if (v.size() != m.rows())
    throw std::invalid_argument("vec_mat_mul: dimension mismatch");
  std::vector<Int> out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) out[c] += v[r] * m.at(r, c);
    }
  }
  return out;
}

namespace {

// Shared HNF driver; applies every row operation to *transform when given.
std::size_t hnf_in_place(IntMatrix& m, IntMatrix* transform) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(a, c), m.at(b, c));
    if (transform)
      for (std::size_t c = 0; c < transform->cols(); ++c)
        std::swap(transform->at(a, c), transform->at(b, c));
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = -m.at(r, c);
    if (transform)
      for (std::size_t c = 0; c < transform->cols(); ++c)
        transform->at(r, c) = -transform->at(r, c);
  };
  auto reduce_row = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    sub_scaled_row(m.row(dst), m.row(src), q);
    if (transform)
      sub_scaled_row(transform->row(dst), transform->row(src), q);
  };

  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclidean sweep: shrink entries in this column until one survives.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (m.at(r, col) == 0) continue;
        if (best == rows ||
            abs(m.at(r, col)) < abs(m.at(best, col)))
          best = r;
      }
      if (best == rows) break;
      swap_rows(pivot_row, best);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m.at(r, col) == 0) continue;
        Int q = m.at(r, col) / m.at(pivot_row, col);
        reduce_row(r, pivot_row, q);
        if (m.at(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(pivot_row, col) == 0) continue;
    if (m.at(pivot_row, col) < 0) negate_row(pivot_row);
    for (std::size_t r = 0; r < pivot_row; ++r)
      reduce_row(r, pivot_row, floor_div(m.at(r, col), m.at(pivot_row, col)));
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

HnfResult hermite_normal_form(IntMatrix m) {
  HnfResult res;
  res.rank = hnf_in_place(m, nullptr);
  res.h = std::move(m);
  return res;
}

HnfTransform hermite_normal_form_with_transform(IntMatrix m) {
  HnfTransform res;
  res.u = IntMatrix::identity(m.rows());
  res.rank = hnf_in_place(m, &res.u);
  res.h = std::move(m);
  return res;
}

IntMatrix kernel(const IntMatrix& m) {
  HnfTransform t = hermite_normal_form_with_transform(m);
  const std::size_t null_dim = m.rows() - t.rank;
  IntMatrix out(null_dim, m.rows());
  for (std::size_t r = 0; r < null_dim; ++r)
    for (std::size_t c = 0; c < m.rows(); ++c)
      out.at(r, c) = t.u.at(t.rank + r, c);
  return out;
}

Submodule::Submodule(std::size_t ambient, IntMatrix generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  if (generators_.rows() > 0 && generators_.cols() != ambient_)
    throw std::invalid_argument("Submodule: generator width != ambient rank");
  HnfResult h = hermite_normal_form(generators_);
  rank_ = h.rank;
  hnf_ = std::move(h.h);
  pivot_cols_.reserve(rank_);
  for (std::size_t r = 0; r < rank_; ++r) {
    std::size_t c = 0;
    while (c < ambient_ && hnf_.at(r, c) == 0) ++c;
    pivot_cols_.push_back(c);
  }
}

bool Submodule::contains(std::span<const Int> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Submodule::contains: dimension mismatch");
  std::vector<Int> w(v.begin(), v.end());
  for (std::size_t r = 0; r < rank_; ++r) {
    const std::size_t c = pivot_cols_[r];
    if (w[c] == 0) continue;
    if (w[c] % hnf_.at(r, c) != 0) return false;
    sub_scaled_row(w, hnf_.row(r), w[c] / hnf_.at(r, c));
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> Submodule::reduce(std::vector<Int> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Submodule::reduce: dimension mismatch");
  for (std::size_t r = 0; r < rank_; ++r) {
    const std::size_t c = pivot_cols_[r];
    if (v[c] == 0) continue;
    sub_scaled_row(v, hnf_.row(r), floor_div(v[c], hnf_.at(r, c)));
  }
  return v;
}

// ---------------------------------------------------------------------------

ModMatrix::ModMatrix(std::uint64_t modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols) {
  if (modulus < 2) throw std::invalid_argument("ModMatrix: modulus must be >= 2");
}

ModMatrix ModMatrix::identity(std::uint64_t modulus, std::size_t k) {
  ModMatrix m(modulus, k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1 % modulus;
  return m;
}

bool ModMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t x) { return x == 0; });
}

std::uint64_t mod_reduce(const Int& x, std::uint64_t m) {
  Int r = x % Int(m);
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m),
               new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1)
    throw NonFieldModulusError("non-field modulus: " + std::to_string(a) +
                               " has no inverse mod " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t modulus) {
  ModMatrix out(modulus, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = mod_reduce(m.at(r, c), modulus);
  return out;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus())
    throw std::invalid_argument("mod_mul: shape or modulus mismatch");
  const std::uint64_t m = a.modulus();
  ModMatrix out(m, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a.at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out.at(r, c) = (out.at(r, c) + x * b.at(k, c)) % m;
    }
  return out;
}

ModMatrix mod_sub(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      a.modulus() != b.modulus())
    throw std::invalid_argument("mod_sub: shape or modulus mismatch");
  const std::uint64_t m = a.modulus();
  ModMatrix out(m, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.at(r, c) = (a.at(r, c) + m - b.at(r, c)) % m;
  return out;
}

namespace {

// Row echelon reduction over Z/m; pivots must be units.  Applies the same
// operations to *transform when given.  Returns pivot columns.
std::vector<std::size_t> mod_echelon(ModMatrix& a, ModMatrix* transform) {
  const std::uint64_t m = a.modulus();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r) {
      if (a.at(r, col) != 0 && std::gcd(a.at(r, col), m) == 1) {
        sel = r;
        break;
      }
    }
    if (sel == rows) {
      for (std::size_t r = pr; r < rows; ++r)
        if (a.at(r, col) != 0)
          throw NonFieldModulusError(
              "non-field modulus: no invertible pivot in column " +
              std::to_string(col));
      continue;
    }
    if (sel != pr) {
      for (std::size_t c = 0; c < cols; ++c)
        std::swap(a.at(sel, c), a.at(pr, c));
      if (transform)
        for (std::size_t c = 0; c < transform->cols(); ++c)
          std::swap(transform->at(sel, c), transform->at(pr, c));
    }
    const std::uint64_t inv = mod_inverse(a.at(pr, col), m);
    for (std::size_t c = 0; c < cols; ++c)
      a.at(pr, c) = (a.at(pr, c) * inv) % m;
    if (transform)
      for (std::size_t c = 0; c < transform->cols(); ++c)
        transform->at(pr, c) = (transform->at(pr, c) * inv) % m;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || a.at(r, col) == 0) continue;
      const std::uint64_t f = a.at(r, col);
      for (std::size_t c = 0; c < cols; ++c)
        a.at(r, c) = (a.at(r, c) + (m - f) * a.at(pr, c)) % m;
      if (transform)
        for (std::size_t c = 0; c < transform->cols(); ++c)
          transform->at(r, c) =
              (transform->at(r, c) + (m - f) * transform->at(pr, c)) % m;
    }
    pivots.push_back(col);
    ++pr;
  }
  return pivots;
}

}  // namespace

std::size_t mod_rank(ModMatrix m) { return mod_echelon(m, nullptr).size(); }

bool mod_is_invertible(const ModMatrix& m) {
  if (m.rows() != m.cols()) return false;
  ModMatrix a = m;
  try {
    return mod_echelon(a, nullptr).size() == m.rows();
  } catch (const NonFieldModulusError&) {
    return false;
  }
}

ModMatrix mod_kernel(const ModMatrix& m) {
  ModMatrix a = m;
  ModMatrix u = ModMatrix::identity(m.modulus(), m.rows());
  const std::size_t rank = mod_echelon(a, &u).size();
  ModMatrix out(m.modulus(), m.rows() - rank, m.rows());
  for (std::size_t r = rank; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c)
      out.at(r - rank, c) = u.at(r, c);
  return out;
}

bool mod_in_row_span(const ModMatrix& gens, std::span<const std::uint64_t> v) {
  if (v.size() != gens.cols())
    throw std::invalid_argument("mod_in_row_span: dimension mismatch");
  ModMatrix stacked(gens.modulus(), gens.rows() + 1, gens.cols());
  for (std::size_t r = 0; r < gens.rows(); ++r)
    for (std::size_t c = 0; c < gens.cols(); ++c)
      stacked.at(r, c) = gens.at(r, c);
  for (std::size_t c = 0; c < gens.cols(); ++c)
    stacked.at(gens.rows(), c) = v[c] % gens.modulus();
  return mod_rank(stacked) == mod_rank(gens);
}

}  // namespace fermat
