#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "fermat/exactlin.hpp"
#include "fermat/homology.hpp"

namespace fermat {

// Index of a basis wedge E_{i1,j1} ^ E_{i2,j2}.  Canonical indices have
// (i1,j1) < (i2,j2) lexicographically; non-canonical pairs are folded in
// with a sign flip so the basis stays strict.
struct WedgeIndex {
  int i1, j1, i2, j2;

  auto operator<=>(const WedgeIndex&) const = default;
};

// All canonical indices in lexicographic order; length C((n-1)^2, 2).
std::vector<WedgeIndex> index_set(int n);

inline std::size_t wedge_rank(int n) {
  const std::size_t d = h1u_rank(n);
  return d * (d - 1) / 2;
}

struct CanonicalTerm {
  WedgeIndex index;
  Int coeff;
};

// Normalize a raw term: equal pairs vanish, out-of-order pairs swap with a
// sign flip.  Indices must lie in [1, n-1]; n is only needed for validation.
std::optional<CanonicalTerm> canonical_term(int i1, int j1, int i2, int j2,
                                            Int c, int n);

// Sparse element of H1(U) ^ H1(U) over the canonical basis.
class WedgeElt {
 public:
  explicit WedgeElt(int n) : n_(n) {}

  int degree() const { return n_; }
  const std::map<WedgeIndex, Int>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * E_{i1,j1} ^ E_{i2,j2}, canonicalizing and dropping zeros.
  void add_term(int i1, int j1, int i2, int j2, Int c);

  WedgeElt& operator+=(const WedgeElt& o);
  WedgeElt& operator-=(const WedgeElt& o);
  friend WedgeElt operator+(WedgeElt a, const WedgeElt& b) { return a += b; }
  friend WedgeElt operator-(WedgeElt a, const WedgeElt& b) { return a -= b; }

  bool operator==(const WedgeElt&) const = default;

  // Dense coordinates in index_set order.
  std::vector<Int> coords() const;
  static WedgeElt from_coords(int n, std::span<const Int> v);

 private:
  int n_;
  std::map<WedgeIndex, Int> terms_;
};

// Bilinear antisymmetric product of two H1(U) classes.
WedgeElt wedge_of_classes(const H1UClass& x, const H1UClass& y);

// The kernel S ^ H1(U) of wedge projection to H1(X) ^ H1(X), generated by
// the gamma rows wedged with the E-basis.  Rank (n-1)/2 (2n^2-5n+2).
Submodule wedge_kernel(int n);

// Image of a wedge element under the map induced by a matrix acting on
// H1(U) (row-vector convention, right multiplication).
WedgeElt apply_induced(const IntMatrix& m, const WedgeElt& w);

// Full matrix of v^w -> vM ^ wM on the canonical wedge basis.
IntMatrix induced_wedge_matrix(const IntMatrix& m, int n);

// Same construction over Z/p, used for the Galois computations.
ModMatrix mod_induced_wedge_matrix(const ModMatrix& m, std::size_t dim);

}  // namespace fermat
