#pragma once

#include <vector>

#include "fermat/exactlin.hpp"
#include "fermat/groupring.hpp"

namespace fermat {

struct NotInH1UError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Class in H_1(U) written in the basis {E_{i,j} : 1 <= i,j <= n-1},
// coordinates ordered (i,j) lexicographically.
struct H1UClass {
  int n = 0;
  std::vector<Int> coords;  // length (n-1)^2

  bool operator==(const H1UClass&) const = default;
};

inline std::size_t h1u_rank(int n) {
  return std::size_t(n - 1) * (n - 1);
}

// Position of E_{i,j} in the lexicographic basis order, 1 <= i,j <= n-1.
inline std::size_t e_basis_index(int i, int j, int n) {
  return std::size_t(i - 1) * (n - 1) + (j - 1);
}

// The group-ring coordinates of [E_{i,j}] = (1-eps0^i)(1-eps1^j) beta.
// Indices are taken mod n; the class is zero whenever i or j is 0 mod n.
GroupRingElt e_class(int i, int j, int n);

// Unique expansion of an augmentation-ideal element in the E-basis.
// Throws NotInH1UError when the row/column-sum test fails.
H1UClass to_e_coordinates(const GroupRingElt& x);

// Inverse of to_e_coordinates: expand sum c_{i,j} E_{i,j} back to the grid.
GroupRingElt from_e_coordinates(const H1UClass& x);

enum class Generator { Eps0, Eps1, Tau };

// Action of eps0, eps1 (group-ring multiplication) or the transposition tau
// (grid transpose) on an H_1(U) class.
H1UClass act(Generator g, const H1UClass& x);

// Matrix of the generator action on the E-basis; classes are row vectors
// and the matrix multiplies on the right.
IntMatrix action_matrix(Generator g, int n);

// H_1(X) = H_1(U)/Stab(eps0 eps1), with the stabilizer spanned by the
// gamma_i beta rows for 1 <= i <= n-1.
struct QuotientStructure {
  int n;
  Submodule stab;  // rank n-1 inside Z^{(n-1)^2}
};

QuotientStructure h1x_structure(int n);

inline std::size_t h1x_rank(int n) {
  return std::size_t(n - 1) * (n - 2);
}

}  // namespace fermat
