#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "fermat/delta.hpp"
#include "golden_delta.hpp"

using namespace fermat;

namespace {

SignedWord rotated(SignedWord w, std::size_t k) {
  std::rotate(w.letters.begin(), w.letters.begin() + k, w.letters.end());
  return w;
}

}  // namespace

TEST_CASE("epsilon coefficients") {
  CHECK(epsilon_coeff(1, 1, 2, 2, 3) == 1);
  CHECK(epsilon_coeff(1, 2, 2, 2, 3) == -1);
  for (int j2 = 1; j2 <= 2; ++j2)
    if (j2 != 1) CHECK(epsilon_coeff(1, 1, 1, j2, 3) == 0);  // i2 - i1 = 0
  CHECK_THROWS_AS(epsilon_coeff(2, 1, 1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_coeff(1, 1, 1, 1, 3), std::invalid_argument);
}

TEST_CASE("delta formula reproduces the golden fixtures") {
  CHECK(delta_formula(3) == golden_wedge(3, golden_delta_3()));
  CHECK(delta_formula(4) == golden_wedge(4, golden_delta_4()));
  CHECK(delta_formula(5) == golden_wedge(5, golden_delta_5()));
}

TEST_CASE("delta term counts and coefficient bounds") {
  for (int n = 3; n <= 12; ++n) {
    WedgeElt d = delta_formula(n);
    CHECK(d.term_count() == std::size_t(n - 1) * (n - 1) * (n - 2));
    for (const auto& [idx, c] : d.terms())
      CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("star words") {
  SignedWord s0 = star_word(0, 3);
  CHECK(s0.letters == std::vector<Letter>{{0, 0, +1},
                                          {0, 1, -1},
                                          {1, 1, +1},
                                          {1, 2, -1},
                                          {2, 2, +1},
                                          {2, 0, -1}});
  SignedWord s1 = star_word(1, 3);
  CHECK(s1.letters == std::vector<Letter>{{2, 0, +1},
                                          {2, 1, -1},
                                          {0, 1, +1},
                                          {0, 2, -1},
                                          {1, 2, +1},
                                          {1, 0, -1}});
  for (int n : {3, 4, 5, 7}) {
    for (int ell = 0; ell < n; ++ell) {
      SignedWord s = star_word(ell, n);
      CHECK(s.letters.size() == std::size_t(2 * n));
      // within one star every letter is distinct
      for (std::size_t a = 0; a < s.letters.size(); ++a)
        for (std::size_t b = a + 1; b < s.letters.size(); ++b)
          CHECK(!(s.letters[a].i == s.letters[b].i &&
                  s.letters[a].j == s.letters[b].j &&
                  s.letters[a].sign == s.letters[b].sign));
    }
  }
}

TEST_CASE("s_star_word structure") {
  SignedWord w3 = s_star_word(3);
  CHECK(w3.letters == std::vector<Letter>{{1, 1, +1},
                                          {1, 2, -1},
                                          {2, 2, +1},
                                          {2, 1, -1},
                                          {1, 2, +1},
                                          {1, 1, -1},
                                          {2, 1, +1},
                                          {2, 2, -1}});
  for (int n = 3; n <= 8; ++n) {
    SignedWord w = s_star_word(n);
    CHECK(w.letters.size() == 2 * h1u_rank(n));
    // every generator once with each sign
    std::map<std::pair<int, int>, std::pair<int, int>> seen;
    for (const Letter& l : w.letters) {
      auto& [plus, minus] = seen[{l.i, l.j}];
      (l.sign > 0 ? plus : minus) += 1;
    }
    CHECK(seen.size() == h1u_rank(n));
    for (const auto& [gen, counts] : seen) {
      CHECK(counts.first == 1);
      CHECK(counts.second == 1);
    }
  }
}

TEST_CASE("degree-2 image basics") {
  const int n = 3;
  SignedWord commutator{SignedWord::Alphabet::LoopE, n,
                        {{1, 1, +1}, {1, 2, +1}, {1, 1, -1}, {1, 2, -1}}};
  WedgeElt expect(n);
  expect.add_term(1, 1, 1, 2, 1);
  CHECK(degree2_image(commutator) == expect);

  SignedWord empty{SignedWord::Alphabet::LoopE, n, {}};
  CHECK(degree2_image(empty).is_zero());

  SignedWord bad{SignedWord::Alphabet::LoopE, n, {{1, 1, +1}}};
  CHECK_THROWS_WITH_AS(degree2_image(bad),
                       doctest::Contains("not in commutator subgroup"),
                       WordError);
}

TEST_CASE("word oracle equals the closed formula") {
  for (int n = 3; n <= 8; ++n) {
    const SignedWord w = s_star_word(n);
    const WedgeElt d = delta_formula(n);
    CHECK(degree2_image(w) == d);
    CHECK(peel_reduction(w) == d);
  }
}

TEST_CASE("peel reduction rejects non-star structure") {
  SignedWord commutator{SignedWord::Alphabet::LoopE, 3,
                        {{1, 1, +1}, {1, 2, +1}, {1, 1, -1}, {1, 2, -1}}};
  CHECK_THROWS_WITH_AS(peel_reduction(commutator),
                       doctest::Contains("structure mismatch"), WordError);
}

TEST_CASE("degree-2 image is rotation invariant") {
  std::mt19937 rng(61);
  for (int n : {3, 4, 5}) {
    const SignedWord w = s_star_word(n);
    const WedgeElt d = degree2_image(w);
    std::uniform_int_distribution<std::size_t> pos(0, w.letters.size() - 1);
    for (int t = 0; t < 20; ++t)
      CHECK(degree2_image(rotated(w, pos(rng))) == d);
  }
}

TEST_CASE("degree-2 image is invariant under free reduction moves") {
  std::mt19937 rng(67);
  for (int n : {3, 4, 5}) {
    const SignedWord base = s_star_word(n);
    const WedgeElt d = degree2_image(base);
    std::uniform_int_distribution<int> gen(1, n - 1);
    for (int t = 0; t < 20; ++t) {
      SignedWord w = base;
      std::uniform_int_distribution<std::size_t> pos(0, w.letters.size());
      const Letter l{gen(rng), gen(rng), rng() % 2 ? 1 : -1};
      const Letter linv{l.i, l.j, -l.sign};
      const std::size_t at = pos(rng);
      w.letters.insert(w.letters.begin() + at, {l, linv});
      CHECK(degree2_image(w) == d);
    }
  }
}

TEST_CASE("rho is nonzero in the quotient") {
  for (int n : {3, 4, 5}) {
    RhoResult r = rho(n);
    CHECK(r.nonzero);
    CHECK(r.content >= 1);
  }
}

TEST_CASE("invariance of delta modulo the kernel") {
  for (int n : {3, 4, 5}) {
    InvarianceReport rep = verify_invariance(n);
    CHECK(rep.eps0);
    CHECK(rep.eps1);
    CHECK(rep.tau);
    CHECK(rep.all());
  }
}

TEST_CASE("clique graph levels") {
  CliqueGraph g3 = clique_graph(3);
  CHECK(g3.vertices.size() == 4);
  CHECK(g3.edges.size() == 4);

  for (int n : {3, 4, 5, 6}) {
    CliqueGraph g = clique_graph(n);
    CHECK(g.edges.size() == std::size_t(n - 1) * (n - 1) * (n - 2));

    // adjacency by level
    auto level_of = [&](std::size_t v) { return g.vertices[v].level; };
    std::map<std::pair<std::size_t, std::size_t>, int> adj;
    for (const auto& e : g.edges) adj[{e.from, e.to}] = e.weight;

    // each level induces a complete graph on its n-1 vertices
    for (int lev = 0; lev < n - 1; ++lev) {
      std::vector<std::size_t> verts;
      for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (level_of(v) == lev) verts.push_back(v);
      CHECK(verts.size() == std::size_t(n - 1));
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
          const bool connected = adj.count({verts[a], verts[b]}) ||
                                 adj.count({verts[b], verts[a]});
          CHECK(connected);
        }
    }

    // weight +1 edges stay within a level; weight -1 edges drop one level
    std::map<std::pair<int, int>, int> cross_count;
    for (const auto& e : g.edges) {
      const int lf = level_of(e.from), lt = level_of(e.to);
      if (e.weight == 1) {
        CHECK(lf == lt);
      } else {
        CHECK(e.weight == -1);
        CHECK((lf - lt + n - 1) % (n - 1) == 1 % (n - 1));
        cross_count[{lf, lt}] += 1;
      }
    }
    // the drop-one-level edges split evenly across the level pairs
    const int expect_cross = (n - 1) * (n - 2) / 2;
    for (const auto& [pair, count] : cross_count)
      CHECK(count == expect_cross);
    int total_cross = 0;
    for (const auto& [pair, count] : cross_count) total_cross += count;
    CHECK(total_cross == (n - 1) * (n - 1) * (n - 2) / 2);
  }
}

TEST_CASE("dot export") {
  std::ostringstream os;
  write_dot(clique_graph(3), os);
  const std::string dot = os.str();
  CHECK(dot.find("graph delta_levels {") == 0);
  CHECK(dot.find("E_1_1 [label=\"E(1,1)\", level=0]") != std::string::npos);
  CHECK(dot.find("E_1_1 -- E_2_2") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);

  // deterministic output
  std::ostringstream os2;
  write_dot(clique_graph(3), os2);
  CHECK(os2.str() == dot);
}
