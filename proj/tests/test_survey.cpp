#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "digsym/catalog.hpp"
#include "digsym/survey.hpp"

using namespace digsym;

namespace {

std::set<CanonicalForm> form_set(const SurveyResult& result) {
  std::set<CanonicalForm> out;
  for (const auto& entry : result.found) out.insert(entry.form);
  return out;
}

}  // namespace

TEST_CASE("survey(3) finds the one-vertex digraph and the directed triangle") {
  const auto result = survey(3);
  REQUIRE(result.found.size() == 2);
  CHECK(result.found[0].representative.vertex_count() == 1);
  CHECK(isomorphic(result.found[1].representative, directed_cycle(3)));
  CHECK(result.unmatched().empty());
}

TEST_CASE("orbit and direct checkers agree at n = 5") {
  const auto orbit = survey(5, OracleMode::orbit);
  const auto direct = survey(5, OracleMode::direct);
  CHECK(form_set(orbit) == form_set(direct));
  REQUIRE(orbit.found.size() == direct.found.size());
  for (std::size_t i = 0; i < orbit.found.size(); ++i) {
    CHECK(orbit.found[i].matched == direct.found[i].matched);
    CHECK(orbit.found[i].plain_homogeneous == direct.found[i].plain_homogeneous);
  }
}

TEST_CASE("found sets grow with the size bound") {
  std::set<CanonicalForm> previous;
  for (Vertex n = 1; n <= 5; ++n) {
    const auto current = form_set(survey(n));
    for (const auto& form : previous) CHECK(current.contains(form));
    previous = current;
  }
}

TEST_CASE("every expected catalog instance is found at n = 5") {
  const auto result = survey(5);
  const auto forms = form_set(result);
  CHECK(forms.contains(canonical_form(independent(1))));
  for (Vertex m = 3; m <= 5; ++m)
    CHECK(forms.contains(canonical_form(directed_cycle(m))));
  CHECK(forms.contains(canonical_form(t_wedge(independent(1)))));
  CHECK(result.found.size() == 4);
  CHECK(result.unmatched().empty());
}

TEST_CASE("survey(6) finds exactly the catalog members") {
  const auto result = survey(6);
  const auto forms = form_set(result);
  CHECK(result.unmatched().empty());
  std::set<CanonicalForm> expected{
      canonical_form(independent(1)),
      canonical_form(directed_cycle(3)),
      canonical_form(directed_cycle(4)),
      canonical_form(directed_cycle(5)),
      canonical_form(directed_cycle(6)),
      canonical_form(lexicographic_product(directed_cycle(3), independent(2)))};
  CHECK(forms == expected);
}

TEST_CASE("survey output is reproducible") {
  const auto a = survey(4);
  const auto b = survey(4);
  REQUIRE(a.found.size() == b.found.size());
  for (std::size_t i = 0; i < a.found.size(); ++i) {
    CHECK(a.found[i].form == b.found[i].form);
    CHECK(a.found[i].matched == b.found[i].matched);
  }
}

TEST_CASE("survey guards") {
  CHECK_THROWS_AS(survey(0), guard_exceeded);
  CHECK_THROWS_AS(survey(7), guard_exceeded);
  CHECK_THROWS_AS(survey(6, OracleMode::direct), guard_exceeded);
}

TEST_CASE("plain homogeneity labels at n = 4") {
  const auto result = survey(4);
  for (const auto& entry : result.found) {
    // I_1, C_3 and C_4 are homogeneous outright
    CHECK(entry.plain_homogeneous);
  }
}
