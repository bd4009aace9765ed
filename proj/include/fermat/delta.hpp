#pragma once

#include <iosfwd>
#include <vector>

#include "fermat/wedge.hpp"

namespace fermat {

struct WordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Letter {
  int i, j;
  int sign;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

// A loop written as a word in the e-paths (indices in [0,n)^2) or the
// E-generators (indices in [1,n)^2).
struct SignedWord {
  enum class Alphabet { PathE, LoopE };

  Alphabet alphabet;
  int n;
  std::vector<Letter> letters;
};

// Coefficient of E_{i1,j1} ^ E_{i2,j2} in Delta: +1 when
// j2-j1 = i2-i1 != 0 (mod n-1), -1 when j2-j1+1 = i2-i1 != 0 (mod n-1).
int epsilon_coeff(int i1, int j1, int i2, int j2, int n);

// Delta by the closed-form coefficients; (n-1)^2 (n-2) nonzero terms.
WedgeElt delta_formula(int n);

// The lifted star loop: 2n alternating letters e_{-l+k,k}, e_{-l+k,k+1}^{-1}.
SignedWord star_word(int ell, int n);

// Concatenation of all star loops rewritten in E-generators, trivial
// letters (ij = 0) dropped; each surviving generator appears exactly once
// with each sign.
SignedWord s_star_word(int n);

// Degree-2 Magnus image of a word in the commutator subgroup: the
// antisymmetric pair-count matrix M[a][b] = sum_{s<t} sign_s sign_t summed
// over a < b as a wedge element.
WedgeElt degree2_image(const SignedWord& w);

// Second evaluator mirroring the peel-off proof: rotate the cycle, strip
// E_{r,j}^{-1} .. E_{r,j} blocks contributing E_{r,j} ^ (-block), recurse
// on the concatenated blocks.  Only guaranteed on s_star_word-shaped input.
WedgeElt peel_reduction(const SignedWord& w);

struct RhoResult {
  std::vector<Int> residue;  // canonical representative mod S ^ H1(U)
  bool nonzero = false;
  Int content = 0;  // gcd of the residue entries (informational)
};

RhoResult rho(int n);
RhoResult rho(int n, const Submodule& kernel_submodule);

struct InvarianceReport {
  bool eps0 = false, eps1 = false, tau = false;

  bool all() const { return eps0 && eps1 && tau; }
};

// Checks (g - 1) Delta in S ^ H1(U) for g in {eps0, eps1, tau}.
InvarianceReport verify_invariance(int n);
InvarianceReport verify_invariance(int n, const Submodule& kernel_submodule);

// The level graph of Delta: vertices E_{i,j} on levels j-i mod n-1, edges
// the nonzero terms of Delta.
struct CliqueGraph {
  struct Vertex {
    int i, j;
    int level;
  };
  struct Edge {
    std::size_t from, to;  // vertex indices
    int weight;
  };

  int n;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

CliqueGraph clique_graph(int n);

void write_dot(const CliqueGraph& g, std::ostream& os);

}  // namespace fermat
