#include <doctest.h>

#include <json.hpp>

#include "relalg/axioms.hpp"

using namespace relalg;

namespace {

Fragment frag(const char* f) { return Fragment::parse(f); }

const char* const kFragments[] = {"pqf", "qf", "pe", "fo", "pqf+eq", "qf+eq", "pe+eq", "fo+eq"};

/// concrete(1, qf, 2) as tables with one corrupted meet entry.
std::shared_ptr<const TableAlgebra> corrupted() {
  auto j = nlohmann::json::parse(tables_to_json(tabulate(concrete(Universe{2}, frag("qf"), 2))->tables()));
  // meet(1, 3) in sort 1 should be 1.
  j["sorts"][1]["meet"][1][3] = 0;
  j["sorts"][1]["meet"][3][1] = 0;
  return std::make_shared<TableAlgebra>(tables_from_json(j.dump()));
}

}  // namespace

TEST_CASE("axiom identifiers") {
  CHECK(all_axioms().size() == 16);
  for (const auto id : all_axioms()) CHECK(parse_axiom(to_string(id)) == id);
  CHECK(to_string(AxiomId::A11b) == "11b");
  CHECK_THROWS_AS(parse_axiom("14"), ParseError);
  CHECK(applicable_axioms(frag("pqf")).size() == 5);
  CHECK(applicable_axioms(frag("qf")).size() == 7);
  CHECK(applicable_axioms(frag("pe")).size() == 9);
  CHECK(applicable_axioms(frag("fo")).size() == 11);
  CHECK(applicable_axioms(frag("fo+eq")).size() == 16);
  CHECK_FALSE(applicable(AxiomId::A5, frag("pe")));
  CHECK_FALSE(applicable(AxiomId::A12, frag("fo")));
}

TEST_CASE("concrete algebras satisfy every applicable axiom") {
  for (std::size_t w = 0; w <= 2; ++w) {
    for (const auto* name : kFragments) {
      CAPTURE(w);
      CAPTURE(name);
      auto a = concrete(Universe{w}, frag(name), 2);
      const auto reports = check_fragment(*a);
      CHECK(reports.size() == applicable_axioms(frag(name)).size());
      CHECK(all_passed(reports));
    }
  }
  auto b = concrete(Universe{2}, frag("pqf"), 3);
  CHECK(check_axiom(*b, AxiomId::A0).passed());
  auto e = concrete(Universe{2}, frag("fo+eq"), 2);
  const auto r = check_axiom(*e, AxiomId::A11c);
  CHECK(r.passed());
  CHECK(r.exhaustive());
}

TEST_CASE("inapplicable axioms are refused") {
  auto a = concrete(Universe{1}, frag("pqf"), 2);
  CHECK_THROWS_AS(check_axiom(*a, AxiomId::A5), FragmentError);
  CHECK_THROWS_AS(check_fragment(*a, frag("qf")), FragmentError);
}

TEST_CASE("diamond fails exactly axiom (0)") {
  auto d = diamond_algebra();
  const auto reports = check_fragment(*d);
  for (const auto& r : reports) {
    CAPTURE(to_string(r.axiom));
    CHECK(r.passed() == (r.axiom != AxiomId::A0));
  }
  const auto g = gallery_diamond();
  CHECK_FALSE(g.evaluation.holds);
  CHECK(g.instance_reported);
  CHECK(g.evaluation.statement == "c1(b) | c2(0) >= c1(a) & c2(b) in sort 2, but b !>= a, 0 !>= b");
  for (const auto& r : g.expected_passes) CHECK(r.passed());
  CHECK(replay(*d, g.instance));
}

TEST_CASE("the pe theory counterexample") {
  const auto g = gallery_pe_theory();
  CHECK(g.algebra->size(0) == 2);
  CHECK_FALSE(g.evaluation.holds);
  CHECK(g.instance_reported);
  CHECK(g.evaluation.statement == "c1(R) | c2(R) >= c1(A) & c2(B) in sort 2, but R !>= A, R !>= B");
  for (const auto& r : g.expected_passes) {
    CAPTURE(to_string(r.axiom));
    CHECK(r.passed());
  }
}

TEST_CASE("an injected fault is found and replays") {
  auto t = corrupted();
  const auto r = check_axiom(*t, AxiomId::A1);
  REQUIRE_FALSE(r.passed());
  for (const auto& v : r.violations) {
    CHECK(v.axiom == AxiomId::A1);
    CHECK(replay(*t, v));
    CHECK_FALSE(evaluate(*t, v).holds);
  }
}

TEST_CASE("sampling is reproducible from the seed") {
  auto t = corrupted();
  CheckBounds b;
  b.exhaustive_cap = 8;
  b.samples = 500;
  b.seed = 42;
  const auto first = check_axiom(*t, AxiomId::A1, b);
  const auto second = check_axiom(*t, AxiomId::A1, b);
  CHECK_FALSE(first.exhaustive());
  CHECK(first.violations == second.violations);
  CHECK(first.instances == second.instances);
  CHECK(first.seed == 42);
  for (const auto& v : first.violations) CHECK(replay(*t, v));
}

TEST_CASE("violation cap truncates") {
  auto t = corrupted();
  CheckBounds b;
  b.violation_cap = 1;
  const auto r = check_axiom(*t, AxiomId::A1, b);
  CHECK(r.violations.size() == 1);
  CHECK(r.truncated);
}
