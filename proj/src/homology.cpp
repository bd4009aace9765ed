#include "fermat/homology.hpp"

namespace fermat {

GroupRingElt e_class(int i, int j, int n) {
  GroupRingElt a = GroupRingElt::one(n) - GroupRingElt::monomial(n, i, 0);
  GroupRingElt b = GroupRingElt::one(n) - GroupRingElt::monomial(n, 0, j);
  return a * b;
}

H1UClass to_e_coordinates(const GroupRingElt& x) {
  if (!in_augmentation_ideal(x))
    throw NotInH1UError("not in H1(U): row/column sums are nonzero");
  const int n = x.degree();
  H1UClass out{n, std::vector<Int>(h1u_rank(n))};
  // E_{i,j} is the only basis element whose grid touches cell (i,j) for
  // i,j >= 1, so the expansion reads off the interior of the grid.
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      out.coords[e_basis_index(i, j, n)] = x.coeff(i, j);
  return out;
}

GroupRingElt from_e_coordinates(const H1UClass& x) {
  const int n = x.n;
  GroupRingElt out(n);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const Int& c = x.coords[e_basis_index(i, j, n)];
      if (c == 0) continue;
      out.coeff(0, 0) += c;
      out.coeff(i, j) += c;
      out.coeff(i, 0) -= c;
      out.coeff(0, j) -= c;
    }
  return out;
}

H1UClass act(Generator g, const H1UClass& x) {
  const int n = x.n;
  GroupRingElt grid = from_e_coordinates(x);
  GroupRingElt moved(n);
  switch (g) {
    case Generator::Eps0:
      moved = GroupRingElt::monomial(n, 1, 0) * grid;
      break;
    case Generator::Eps1:
      moved = GroupRingElt::monomial(n, 0, 1) * grid;
      break;
    case Generator::Tau:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) moved.coeff(j, i) = grid.coeff(i, j);
      break;
  }
  return to_e_coordinates(moved);
}

IntMatrix action_matrix(Generator g, int n) {
  const std::size_t d = h1u_rank(n);
  IntMatrix m(d, d);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      H1UClass basis{n, std::vector<Int>(d)};
      basis.coords[e_basis_index(i, j, n)] = 1;
      H1UClass image = act(g, basis);
      for (std::size_t c = 0; c < d; ++c)
        m.at(e_basis_index(i, j, n), c) = image.coords[c];
    }
  return m;
}

QuotientStructure h1x_structure(int n) {
  if (n < 3) throw std::invalid_argument("h1x_structure: n must be >= 3");
  const std::size_t d = h1u_rank(n);
  IntMatrix gens(std::size_t(n - 1), d);
  for (int i = 1; i < n; ++i) {
    H1UClass row = to_e_coordinates(gamma(i, n));
    for (std::size_t c = 0; c < d; ++c) gens.at(i - 1, c) = row.coords[c];
  }
  return QuotientStructure{n, Submodule(d, std::move(gens))};
}

}  // namespace fermat
