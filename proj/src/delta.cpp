#include "fermat/delta.hpp"

#include <algorithm>
#include <ostream>

namespace fermat {

namespace {

int mod_residue(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int epsilon_coeff(int i1, int j1, int i2, int j2, int n) {
  const bool in_index_set =
      1 <= i1 && i1 <= i2 && i2 <= n - 1 && 1 <= j1 && j1 <= n - 1 &&
      1 <= j2 && j2 <= n - 1 && !(i1 == i2 && j1 == j2);
  if (!in_index_set)
    throw std::invalid_argument("epsilon_coeff: index outside I");
  const int di = mod_residue(i2 - i1, n - 1);
  if (di == 0) return 0;
  const int dj = mod_residue(j2 - j1, n - 1);
  if (dj == di) return 1;
  if (mod_residue(dj + 1, n - 1) == di) return -1;
  return 0;
}

WedgeElt delta_formula(int n) {
  if (n < 3) throw std::invalid_argument("delta_formula: n must be >= 3");
  WedgeElt out(n);
  for (const WedgeIndex& idx : index_set(n)) {
    const int c = epsilon_coeff(idx.i1, idx.j1, idx.i2, idx.j2, n);
    if (c != 0) out.add_term(idx.i1, idx.j1, idx.i2, idx.j2, c);
  }
  return out;
}

SignedWord star_word(int ell, int n) {
  if (ell < 0 || ell > n - 1)
    throw std::invalid_argument("star_word: ell outside [0, n-1]");
  SignedWord w{SignedWord::Alphabet::PathE, n, {}};
  w.letters.reserve(2 * n);
  for (int k = 0; k < n; ++k) {
    const int i = mod_residue(-ell + k, n);
    w.letters.push_back(Letter{i, k, +1});
    w.letters.push_back(Letter{i, (k + 1) % n, -1});
  }
  return w;
}

SignedWord s_star_word(int n) {
  if (n < 3) throw std::invalid_argument("s_star_word: n must be >= 3");
  SignedWord w{SignedWord::Alphabet::LoopE, n, {}};
  for (int ell = 0; ell < n; ++ell) {
    for (const Letter& l : star_word(ell, n).letters) {
      if (l.i == 0 || l.j == 0) continue;  // trivial generator, dropped
      w.letters.push_back(l);
    }
  }
  return w;
}

WedgeElt degree2_image(const SignedWord& w) {
  if (w.alphabet != SignedWord::Alphabet::LoopE)
    throw std::invalid_argument("degree2_image: expects an E-alphabet word");
  const int n = w.n;
  const std::size_t d = h1u_rank(n);
  auto pos = [n](const Letter& l) { return e_basis_index(l.i, l.j, n); };

  std::vector<long long> exponent_sum(d, 0);
  for (const Letter& l : w.letters) {
    if (l.i < 1 || l.i > n - 1 || l.j < 1 || l.j > n - 1)
      throw std::invalid_argument("degree2_image: letter outside alphabet");
    exponent_sum[pos(l)] += l.sign;
  }
  if (std::any_of(exponent_sum.begin(), exponent_sum.end(),
                  [](long long s) { return s != 0; }))
    throw WordError("not in commutator subgroup: nonzero exponent sum");

  std::vector<long long> m(d * d, 0);
  for (std::size_t s = 0; s < w.letters.size(); ++s)
    for (std::size_t t = s + 1; t < w.letters.size(); ++t) {
      const std::size_t a = pos(w.letters[s]), b = pos(w.letters[t]);
      if (a != b) m[a * d + b] += w.letters[s].sign * w.letters[t].sign;
    }

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      if (m[a * d + b] + m[b * d + a] != 0)
        throw WordError("non-Lie degree-2 part: pair matrix not antisymmetric");

  WedgeElt out(n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      if (m[a * d + b] == 0) continue;
      const int i1 = int(a / (n - 1)) + 1, j1 = int(a % (n - 1)) + 1;
      const int i2 = int(b / (n - 1)) + 1, j2 = int(b % (n - 1)) + 1;
      out.add_term(i1, j1, i2, j2, m[a * d + b]);
    }
  return out;
}

namespace {

// One peel pass: the cycle must decompose as blocks
// E_{r,j}^-1 . f_j . E_{r,j} with r the lowest row present.  Each block
// contributes E_{r,j} ^ (-f_j); the concatenated f_j form the next cycle.
WedgeElt peel_cycle(std::vector<Letter> cycle, int n) {
  WedgeElt out(n);
  if (cycle.empty()) return out;

  int r = n;
  for (const Letter& l : cycle) r = std::min(r, l.i);

  auto start = std::find_if(cycle.begin(), cycle.end(), [r](const Letter& l) {
    return l.i == r && l.sign == -1;
  });
  if (start == cycle.end())
    throw WordError("structure mismatch: lowest row has no inverse letter");
  std::rotate(cycle.begin(), start, cycle.end());

  std::vector<Letter> residue;
  std::size_t k = 0;
  while (k < cycle.size()) {
    const Letter open = cycle[k];
    if (open.i != r || open.sign != -1)
      throw WordError("structure mismatch: expected an inverse row letter");
    ++k;
    bool closed = false;
    while (k < cycle.size()) {
      const Letter& l = cycle[k];
      if (l.i == r) {
        if (l.j != open.j || l.sign != 1)
          throw WordError("structure mismatch: unbalanced row letters");
        closed = true;
        ++k;
        break;
      }
      out.add_term(r, open.j, l.i, l.j, -l.sign);
      residue.push_back(l);
      ++k;
    }
    if (!closed)
      throw WordError("structure mismatch: unclosed block");
  }
  return out + peel_cycle(std::move(residue), n);
}

}  // namespace

WedgeElt peel_reduction(const SignedWord& w) {
  if (w.alphabet != SignedWord::Alphabet::LoopE)
    throw std::invalid_argument("peel_reduction: expects an E-alphabet word");
  return peel_cycle(w.letters, w.n);
}

RhoResult rho(int n) { return rho(n, wedge_kernel(n)); }

RhoResult rho(int n, const Submodule& kernel_submodule) {
  RhoResult res;
  res.residue = kernel_submodule.reduce(delta_formula(n).coords());
  for (const Int& x : res.residue) {
    if (x == 0) continue;
    res.nonzero = true;
    res.content = res.content == 0 ? abs(x) : gcd(res.content, Int(abs(x)));
  }
  return res;
}

InvarianceReport verify_invariance(int n) {
  return verify_invariance(n, wedge_kernel(n));
}

InvarianceReport verify_invariance(int n, const Submodule& kernel_submodule) {
  const WedgeElt delta = delta_formula(n);
  auto member = [&](Generator g) {
    const WedgeElt diff =
        apply_induced(action_matrix(g, n), delta) - delta;
    return kernel_submodule.contains(diff.coords());
  };
  InvarianceReport rep;
  rep.eps0 = member(Generator::Eps0);
  rep.eps1 = member(Generator::Eps1);
  rep.tau = member(Generator::Tau);
  return rep;
}

CliqueGraph clique_graph(int n) {
  CliqueGraph g{n, {}, {}};
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      g.vertices.push_back(
          CliqueGraph::Vertex{i, j, mod_residue(j - i, n - 1)});
  const WedgeElt d = delta_formula(n);
  for (const auto& [idx, c] : d.terms())
    g.edges.push_back(CliqueGraph::Edge{
        e_basis_index(idx.i1, idx.j1, n), e_basis_index(idx.i2, idx.j2, n),
        int(c)});
  return g;
}

void write_dot(const CliqueGraph& g, std::ostream& os) {
  os << "graph delta_levels {\n";
  os << "  node [shape=circle];\n";
  for (int level = 0; level < g.n - 1; ++level) {
    os << "  { rank=same;";
    for (const auto& v : g.vertices)
      if (v.level == level) os << " E_" << v.i << "_" << v.j << ";";
    os << " }\n";
  }
  for (const auto& v : g.vertices)
    os << "  E_" << v.i << "_" << v.j << " [label=\"E(" << v.i << "," << v.j
       << ")\", level=" << v.level << "];\n";
  for (const auto& e : g.edges) {
    const auto& a = g.vertices[e.from];
    const auto& b = g.vertices[e.to];
    os << "  E_" << a.i << "_" << a.j << " -- E_" << b.i << "_" << b.j
       << " [label=\"" << e.weight << "\"];\n";
  }
  os << "}\n";
}

}  // namespace fermat
