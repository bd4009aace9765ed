#include <doctest.h>

#include <json.hpp>

#include "fermat/galois.hpp"
#include "fermat/homology.hpp"

using namespace fermat;
using nlohmann::json;

namespace {

json matrix_json(const ModMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

json identity_doc(std::uint64_t p, int copies = 1) {
  const std::size_t d = (p - 1) * (p - 1);
  json doc;
  doc["p"] = p;
  doc["basis"] = "E_lex_1..n-1";
  doc["generators"] = json::array();
  for (int k = 0; k < copies; ++k)
    doc["generators"].push_back(
        {{"name", "id" + std::to_string(k)},
         {"matrix", matrix_json(ModMatrix::identity(p, d))}});
  return doc;
}

json doc_with_generators(
    std::uint64_t p,
    const std::vector<std::pair<std::string, ModMatrix>>& gens) {
  json doc;
  doc["p"] = p;
  doc["basis"] = "E_lex_1..n-1";
  doc["generators"] = json::array();
  for (const auto& [name, m] : gens)
    doc["generators"].push_back({{"name", name}, {"matrix", matrix_json(m)}});
  return doc;
}

}  // namespace

TEST_CASE("structural graded dimension") {
  CHECK(graded2_dimension(5) == 65);
  CHECK(graded2_dimension(3) == 0);  // genus 1: wedge is the rho line
  CHECK(graded2_dimension(7) == 434);
}

TEST_CASE("identity-only spec") {
  ActionSpec spec = load_action(identity_doc(5));
  CHECK(spec.p == 5);
  auto gs = graded2_action(spec);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0] == ModMatrix::identity(5, 65));
  CHECK(invariant_dimension(spec) == 65);
  CHECK(check_annihilator(spec));
  for (const auto& [name, ok] : rho_invariance(spec)) CHECK(ok);
}

TEST_CASE("schema and validation diagnostics") {
  SUBCASE("missing fields") {
    CHECK_THROWS_WITH_AS(load_action(json::object()),
                         doctest::Contains("schema violation"),
                         ActionSpecError);
  }
  SUBCASE("composite p") {
    json doc = identity_doc(5);
    doc["p"] = 9;
    CHECK_THROWS_WITH_AS(load_action(doc), doctest::Contains("odd prime"),
                         ActionSpecError);
  }
  SUBCASE("wrong basis tag") {
    json doc = identity_doc(5);
    doc["basis"] = "other";
    CHECK_THROWS_AS(load_action(doc), ActionSpecError);
  }
  SUBCASE("wrong matrix size") {
    json doc = identity_doc(5);
    doc["generators"][0]["matrix"] = matrix_json(ModMatrix::identity(5, 3));
    CHECK_THROWS_WITH_AS(load_action(doc), doctest::Contains("size error"),
                         ActionSpecError);
  }
  SUBCASE("singular matrix") {
    json doc = identity_doc(5);
    ModMatrix zero(5, 16, 16);
    doc["generators"][0]["matrix"] = matrix_json(zero);
    CHECK_THROWS_WITH_AS(load_action(doc),
                         doctest::Contains("non-invertible"), ActionSpecError);
  }
  SUBCASE("relation submodule must be preserved") {
    json doc = identity_doc(5);
    ModMatrix m = ModMatrix::identity(5, 16);
    m.at(0, 1) = 1;  // shear sending E_{1,1} to E_{1,1} + E_{1,2}
    doc["generators"][0]["matrix"] = matrix_json(m);
    CHECK_THROWS_WITH_AS(load_action(doc),
                         doctest::Contains("relation not preserved"),
                         ActionSpecError);
  }
  SUBCASE("missing file reports external data required") {
    CHECK_THROWS_WITH_AS(load_action_file("/nonexistent/action.json"),
                         doctest::Contains("external data required"),
                         ActionSpecError);
  }
}

TEST_CASE("natural curve automorphisms as a spec") {
  const std::uint64_t p = 5;
  ModMatrix eps0 = reduce_mod(action_matrix(Generator::Eps0, 5), p);
  ModMatrix eps1 = reduce_mod(action_matrix(Generator::Eps1, 5), p);

  SUBCASE("invariant dimension cross-checked by rank-nullity") {
    ActionSpec spec = load_action(doc_with_generators(p, {{"eps0", eps0}}));
    auto gs = graded2_action(spec);
    REQUIRE(gs.size() == 1);
    ModMatrix diff = mod_sub(gs[0], ModMatrix::identity(p, 65));
    CHECK(invariant_dimension(spec) == 65 - mod_rank(diff));
  }

  SUBCASE("functoriality of the graded action") {
    ModMatrix prod = mod_mul(eps0, eps1);
    ActionSpec spec = load_action(doc_with_generators(
        p, {{"a", eps0}, {"b", eps1}, {"ab", prod}}));
    auto gs = graded2_action(spec);
    REQUIRE(gs.size() == 3);
    CHECK(gs[2] == mod_mul(gs[0], gs[1]));
  }

  SUBCASE("rho is fixed by the group-ring generators") {
    ActionSpec spec =
        load_action(doc_with_generators(p, {{"eps0", eps0}, {"eps1", eps1}}));
    for (const auto& [name, ok] : rho_invariance(spec)) CHECK(ok);
  }

  SUBCASE("invariant dimension ignores generator order") {
    ActionSpec fwd =
        load_action(doc_with_generators(p, {{"a", eps0}, {"b", eps1}}));
    ActionSpec rev =
        load_action(doc_with_generators(p, {{"b", eps1}, {"a", eps0}}));
    CHECK(invariant_dimension(fwd) == invariant_dimension(rev));
  }

  SUBCASE("a single nontrivial generator fails the annihilator check") {
    // (M - I) = 0 would force eps0 to act trivially on H1(X; Z/5)
    ActionSpec spec = load_action(doc_with_generators(p, {{"a", eps0}}));
    CHECK_FALSE(check_annihilator(spec));
  }
}

TEST_CASE("invariant dimension bounded by ambient") {
  const std::uint64_t p = 5;
  ModMatrix eps0 = reduce_mod(action_matrix(Generator::Eps0, 5), p);
  ActionSpec spec = load_action(doc_with_generators(p, {{"eps0", eps0}}));
  const std::size_t dim = invariant_dimension(spec);
  CHECK(dim <= graded2_dimension(p));
}
