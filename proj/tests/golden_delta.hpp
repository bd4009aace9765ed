#pragma once

#include <vector>

#include "fermat/wedge.hpp"

// Frozen expansions of Delta for n = 3, 4, 5 in the canonical wedge basis.
// Each entry is (i1, j1, i2, j2, coefficient).

struct GoldenTerm {
  int i1, j1, i2, j2, coeff;
};

inline const std::vector<GoldenTerm>& golden_delta_3() {
  static const std::vector<GoldenTerm> t = {
      {1, 1, 2, 2, +1},
      {1, 1, 2, 1, -1},
      {1, 2, 2, 1, +1},
      {1, 2, 2, 2, -1},
  };
  return t;
}

inline const std::vector<GoldenTerm>& golden_delta_4() {
  static const std::vector<GoldenTerm> t = {
      {1, 1, 2, 2, +1}, {1, 1, 2, 1, -1}, {1, 1, 3, 3, +1}, {1, 1, 3, 2, -1},
      {1, 2, 2, 3, +1}, {1, 2, 2, 2, -1}, {1, 2, 3, 1, +1}, {1, 2, 3, 3, -1},
      {1, 3, 2, 1, +1}, {1, 3, 2, 3, -1}, {1, 3, 3, 2, +1}, {1, 3, 3, 1, -1},
      {2, 1, 3, 2, +1}, {2, 1, 3, 1, -1},
      {2, 2, 3, 3, +1}, {2, 2, 3, 2, -1},
      {2, 3, 3, 1, +1}, {2, 3, 3, 3, -1},
  };
  return t;
}

inline const std::vector<GoldenTerm>& golden_delta_5() {
  static const std::vector<GoldenTerm> t = {
      {1, 1, 2, 1, -1}, {1, 1, 2, 2, +1}, {1, 1, 3, 2, -1}, {1, 1, 3, 3, +1},
      {1, 1, 4, 3, -1}, {1, 1, 4, 4, +1},
      {1, 2, 2, 2, -1}, {1, 2, 2, 3, +1}, {1, 2, 3, 3, -1}, {1, 2, 3, 4, +1},
      {1, 2, 4, 4, -1}, {1, 2, 4, 1, +1},
      {1, 3, 2, 3, -1}, {1, 3, 2, 4, +1}, {1, 3, 3, 4, -1}, {1, 3, 3, 1, +1},
      {1, 3, 4, 1, -1}, {1, 3, 4, 2, +1},
      {1, 4, 2, 4, -1}, {1, 4, 2, 1, +1}, {1, 4, 3, 1, -1}, {1, 4, 3, 2, +1},
      {1, 4, 4, 2, -1}, {1, 4, 4, 3, +1},
      {2, 1, 3, 1, -1}, {2, 1, 3, 2, +1}, {2, 1, 4, 2, -1}, {2, 1, 4, 3, +1},
      {2, 2, 3, 2, -1}, {2, 2, 3, 3, +1}, {2, 2, 4, 3, -1}, {2, 2, 4, 4, +1},
      {2, 3, 3, 3, -1}, {2, 3, 3, 4, +1}, {2, 3, 4, 4, -1}, {2, 3, 4, 1, +1},
      {2, 4, 3, 4, -1}, {2, 4, 3, 1, +1}, {2, 4, 4, 1, -1}, {2, 4, 4, 2, +1},
      {3, 1, 4, 1, -1}, {3, 1, 4, 2, +1},
      {3, 2, 4, 2, -1}, {3, 2, 4, 3, +1},
      {3, 3, 4, 3, -1}, {3, 3, 4, 4, +1},
      {3, 4, 4, 1, +1}, {3, 4, 4, 4, -1},
  };
  return t;
}

inline fermat::WedgeElt golden_wedge(int n,
                                     const std::vector<GoldenTerm>& terms) {
  fermat::WedgeElt w(n);
  for (const GoldenTerm& t : terms)
    w.add_term(t.i1, t.j1, t.i2, t.j2, t.coeff);
  return w;
}
