#include "fermat/groupring.hpp"

#include <algorithm>

namespace fermat {

namespace {

int wrap(int k, int n) {
  int r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GroupRingElt::GroupRingElt(int n) : n_(n), coeffs_(std::size_t(n) * n) {
  if (n < 2) throw std::invalid_argument("GroupRingElt: degree must be >= 2");
}

GroupRingElt GroupRingElt::monomial(int n, int i, int j, Int c) {
  GroupRingElt e(n);
  e.coeff(i, j) = std::move(c);
  return e;
}

std::size_t GroupRingElt::idx(int i, int j) const {
  return std::size_t(wrap(i, n_)) * n_ + wrap(j, n_);
}

bool GroupRingElt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Int& x) { return x == 0; });
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o) {
  if (n_ != o.n_) throw std::invalid_argument("GroupRingElt: degree mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o) {
  if (n_ != o.n_) throw std::invalid_argument("GroupRingElt: degree mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

GroupRingElt GroupRingElt::operator-() const {
  GroupRingElt out(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out.coeffs_[k] = -coeffs_[k];
  return out;
}

GroupRingElt multiply(const GroupRingElt& a, const GroupRingElt& b) {
  const int n = a.degree();
  if (n != b.degree())
    throw std::invalid_argument("multiply: degree mismatch");
  GroupRingElt out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Int& x = a.coeff(i, j);
      if (x == 0) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Int& y = b.coeff(k, l);
          if (y != 0) out.coeff(i + k, j + l) += x * y;
        }
    }
  return out;
}

bool in_augmentation_ideal(const GroupRingElt& a) {
  const int n = a.degree();
  for (int i = 0; i < n; ++i) {
    Int row_sum = 0, col_sum = 0;
    for (int j = 0; j < n; ++j) {
      row_sum += a.coeff(i, j);
      col_sum += a.coeff(j, i);
    }
    if (row_sum != 0 || col_sum != 0) return false;
  }
  return true;
}

GroupRingElt gamma(int i, int n) {
  if (n < 3) throw std::invalid_argument("gamma: degree must be >= 3");
  GroupRingElt diagonal(n);
  for (int k = 0; k < n; ++k) diagonal.coeff(k, k) = 1;
  GroupRingElt factor = GroupRingElt::one(n) - GroupRingElt::monomial(n, 0, 1);
  return GroupRingElt::monomial(n, -i, 0) * factor * diagonal;
}

}  // namespace fermat
