#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "relalg/algebra.hpp"
#include "relalg/axioms.hpp"
#include "relalg/morphism.hpp"

using namespace relalg;

namespace {

Fragment frag(const char* f) { return Fragment::parse(f); }

}  // namespace

TEST_CASE("fragment names") {
  for (const auto* name : {"pqf", "qf", "pe", "fo", "pqf+eq", "qf+eq", "pe+eq", "fo+eq"}) {
    CHECK(Fragment::parse(name).to_string() == name);
  }
  CHECK_THROWS_AS(Fragment::parse("fol"), ParseError);
  CHECK_THROWS_AS(Fragment::parse("fo+neq"), ParseError);
  CHECK(covers(frag("fo+eq"), frag("pe")));
  CHECK_FALSE(covers(frag("pe"), frag("qf")));
}

TEST_CASE("concrete sort sizes") {
  auto a = concrete(Universe{1}, frag("pqf"), 2);
  CHECK(a->size(0) == 2);
  CHECK(a->size(1) == 2);
  CHECK(a->size(2) == 2);
  auto b = concrete(Universe{2}, frag("pqf"), 2);
  CHECK(b->size(0) == 2);
  CHECK(b->size(1) == 4);
  CHECK(b->size(2) == 16);
  auto e = concrete(Universe{0}, frag("pqf"), 1);
  CHECK(e->size(0) == 2);
  CHECK(e->size(1) == 1);
  CHECK(e->zero(1) == e->one(1));
  // Concrete algebras extend past their max sort on demand.
  CHECK(b->size(3) == 256);
  CHECK_THROWS_AS(concrete(Universe{4}, frag("pqf"), 2)->size(4), InsufficientSorts);
}

TEST_CASE("concrete operations match the relational definitions") {
  for (std::size_t w = 0; w <= 2; ++w) {
    auto a = concrete(Universe{w}, frag("fo+eq"), 2);
    for (int n = 0; n <= 2; ++n) {
      const auto rels = oracle::all_relations(w, n);
      REQUIRE(rels.size() == a->size(n));
      for (const auto& r : rels) {
        const auto x = a->element(r);
        CHECK(a->relation(n, x) == r);
        CHECK(a->relation(n, a->neg(n, x)) == complement(r));
        for (const auto& s : rels) {
          const auto y = a->element(s);
          CHECK(a->relation(n, a->meet(n, x, y)) == meet(r, s));
          CHECK(a->relation(n, a->join(n, x, y)) == join(r, s));
        }
        for (int k = 0; k <= 2; ++k) {
          for (const auto& alpha : all_substitutions(n, k)) {
            const auto expect = oracle::apply(alpha.map(), k, w, r.tuples());
            CHECK(a->relation(k, a->subst(alpha, x)) == oracle::to_relation(w, k, expect));
          }
        }
      }
      if (n >= 1) {
        for (const auto& r : rels) {
          const auto got = a->relation(n - 1, a->exists(n - 1, a->element(r)));
          CHECK(got == oracle::to_relation(w, n - 1, oracle::project(n - 1, w, r.tuples())));
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) CHECK(a->relation(n, a->delta(n, i, j)) == delta(Universe{w}, n, i, j));
      }
    }
  }
}

TEST_CASE("operations outside the fragment are rejected") {
  auto a = concrete(Universe{2}, frag("pqf"), 2);
  CHECK_THROWS_AS(a->neg(1, 0), FragmentError);
  CHECK_THROWS_AS(a->exists(0, 0), FragmentError);
  CHECK_THROWS_AS(a->delta(2, 1, 2), FragmentError);
  CHECK_THROWS_AS(a->meet(1, 0, 4), SortError);
}

TEST_CASE("products") {
  auto one = concrete(Universe{1}, frag("qf"), 2);
  auto d = product({one, one});
  for (int n = 0; n <= 2; ++n) CHECK(d->size(n) == 4);
  // 1 = (top, bottom) and 2 = (bottom, top) are the incomparable middle elements.
  CHECK_FALSE(d->leq(1, 1, 2));
  CHECK_FALSE(d->leq(1, 2, 1));
  for (Elem x = 0; x < 4; ++x) {
    CHECK(d->leq(1, d->zero(1), x));
    CHECK(d->leq(1, x, x));
    CHECK(d->combine(1, d->split(1, x)) == x);
  }
  auto two = concrete(Universe{2}, frag("qf"), 2);
  CHECK(product({one, two})->size(1) == 8);
  CHECK_THROWS_AS(product({one, concrete(Universe{1}, frag("pqf"), 2)}), PreconditionError);

  auto single = product({two});
  for (int n = 0; n <= 2; ++n) {
    CHECK(single->size(n) == two->size(n));
    CHECK(verify_morphism(projection(*single, 0, 2), *single, *two, frag("qf"), 2).ok());
  }
  auto mixed = product({one, two});
  CHECK(verify_morphism(projection(*mixed, 0, 2), *mixed, *one, frag("qf"), 2).ok());
  CHECK(verify_morphism(projection(*mixed, 1, 2), *mixed, *two, frag("qf"), 2).ok());
}

TEST_CASE("generated subalgebras") {
  auto parent = concrete(Universe{2}, frag("pqf"), 1);
  auto top_only = generated_subalgebra(parent, {{"T", 1, parent->one(1)}});
  CHECK(top_only->size(0) == 2);
  CHECK(top_only->size(1) == 2);

  std::vector<Generator> everything;
  for (int n = 0; n <= 1; ++n) {
    for (Elem e = 0; e < parent->size(n); ++e) everything.push_back({"g" + std::to_string(n) + "_" + std::to_string(e), n, e});
  }
  auto all = generated_subalgebra(parent, everything);
  for (int n = 0; n <= 1; ++n) CHECK(all->size(n) == parent->size(n));

  auto q = pe_theory_algebra();
  CHECK(q->size(0) == 2);
  // Closed under the operations, and each operation is the parent's.
  for (int n = 0; n <= 1; ++n) {
    for (Elem x = 0; x < q->size(n); ++x) {
      for (Elem y = 0; y < q->size(n); ++y) {
        CHECK(q->to_parent(n, q->meet(n, x, y)) == q->parent().meet(n, q->to_parent(n, x), q->to_parent(n, y)));
      }
      CHECK(q->witness(n, x) != nullptr);
    }
  }
  CHECK_THROWS_AS(generated_subalgebra(parent, {{"bad", 1, 99}}), SortError);
}

TEST_CASE("table algebras") {
  auto src = concrete(Universe{1}, frag("qf+eq"), 2);
  auto t = tabulate(src);
  for (int n = 0; n <= 2; ++n) CHECK(t->size(n) == src->size(n));
  CHECK_FALSE(t->extendable());
  CHECK_THROWS_AS(t->size(3), InsufficientSorts);
  CHECK(all_passed(check_fragment(*t)));

  const auto json_text = tables_to_json(t->tables());
  TableAlgebra back(tables_from_json(json_text));
  CHECK(tables_to_json(back.tables()) == json_text);

  auto shuffled = tabulate(concrete(Universe{2}, frag("pe"), 1), std::uint64_t{5}, true);
  CHECK(shuffled->extendable());
  CHECK(shuffled->size(2) == 16);
  CHECK(all_passed(check_fragment(*shuffled)));

  CHECK_THROWS_AS(tables_from_json("{"), ParseError);
  auto j = nlohmann::json::parse(json_text);
  j["sorts"][1]["meet"] = nlohmann::json::array();
  CHECK_THROWS_AS(TableAlgebra(tables_from_json(j.dump())), Error);
}

TEST_CASE("morphism verification") {
  auto a = concrete(Universe{2}, frag("fo+eq"), 2);
  CHECK(verify_morphism(identity_map(*a, 2), *a, *a, frag("fo+eq"), 2).ok());
  auto broken = identity_map(*a, 2);
  broken.images[1][a->one(1)] = a->zero(1);
  const auto check = verify_morphism(broken, *a, *a, frag("fo+eq"), 2);
  REQUIRE_FALSE(check.ok());
  CHECK(check.violation->condition == "one");
}
