#pragma once

#include <vector>

#include "fermat/exactlin.hpp"

namespace fermat {

// Element of the group ring Z[mu_n x mu_n], stored as the n x n grid of
// coefficients a_{i,j} of the monomials eps0^i eps1^j.  Exponents are
// reduced mod n on access, so negative indices are fine.
class GroupRingElt {
 public:
  explicit GroupRingElt(int n);

  static GroupRingElt one(int n) { return monomial(n, 0, 0); }
  static GroupRingElt monomial(int n, int i, int j, Int c = 1);

  int degree() const { return n_; }

  Int& coeff(int i, int j) { return coeffs_[idx(i, j)]; }
  const Int& coeff(int i, int j) const { return coeffs_[idx(i, j)]; }

  bool is_zero() const;

  GroupRingElt& operator+=(const GroupRingElt& o);
  GroupRingElt& operator-=(const GroupRingElt& o);
  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) {
    return a += b;
  }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) {
    return a -= b;
  }
  friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
  GroupRingElt operator-() const;

  bool operator==(const GroupRingElt&) const = default;

 private:
  std::size_t idx(int i, int j) const;

  int n_;
  std::vector<Int> coeffs_;
};

// Convolution product with exponents mod n.
GroupRingElt multiply(const GroupRingElt& a, const GroupRingElt& b);

inline GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
  return multiply(a, b);
}

// Membership in the augmentation ideal <(eps0-1)(eps1-1)>: every row sum and
// every column sum of the coefficient grid vanishes.
bool in_augmentation_ideal(const GroupRingElt& a);

// The relation element gamma_i = eps0^{-i} (1-eps1)(1 + eps0 eps1 + ... +
// eps0^{n-1} eps1^{n-1}).
GroupRingElt gamma(int i, int n);

}  // namespace fermat
