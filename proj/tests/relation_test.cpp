#include <doctest.h>

#include "oracles.hpp"
#include "relalg/relation.hpp"

using namespace relalg;

namespace {

const Universe W2{2};

Relation rel(std::size_t w, int arity, const std::vector<Tuple>& ts) { return Relation::from_tuples(Universe{w}, arity, ts); }

}  // namespace

TEST_CASE("tuple indexing is a bijection") {
  for (std::size_t w = 1; w <= 3; ++w) {
    for (int n = 0; n <= 3; ++n) {
      const auto ts = oracle::all_tuples(w, n);
      CHECK(tuple_count(Universe{w}, n) == ts.size());
      for (const auto& t : ts) CHECK(tuple_at(Universe{w}, n, tuple_index(Universe{w}, t)) == t);
    }
  }
  CHECK(tuple_count(Universe{0}, 0) == 1);
  CHECK(tuple_count(Universe{0}, 2) == 0);
}

TEST_CASE("substitutions act on tuples") {
  CHECK(tuple_apply(Substitution({2, 1}, 2), Tuple{0, 1}) == Tuple{1, 0});
  CHECK(tuple_apply(Substitution({1, 1, 2, 1}, 3), Tuple{4, 5, 6}) == Tuple{4, 4, 5, 4});
  CHECK(tuple_apply(Substitution::identity(3), Tuple{2, 0, 1}) == Tuple{2, 0, 1});
  CHECK_THROWS_AS(Substitution({3}, 2), ArityError);
  CHECK_THROWS_AS(Substitution({0}, 2), ArityError);
}

TEST_CASE("substitutions act on relations by inverse image") {
  CHECK(rel_apply(Substitution({1}, 2), rel(2, 1, {{0}})) == rel(2, 2, {{0, 0}, {0, 1}}));
  CHECK(rel_apply(Substitution({2, 1}, 2), rel(2, 2, {{0, 1}})) == rel(2, 2, {{1, 0}}));
  CHECK(rel_apply(Substitution({1, 1}, 1), rel(2, 2, {{0, 0}, {0, 1}})) == rel(2, 1, {{0}}));
  CHECK_THROWS_AS(rel_apply(Substitution({1, 1}, 1), rel(2, 1, {{0}})), ArityError);
}

TEST_CASE("rel_apply agrees with the brute-force definition") {
  for (std::size_t w = 0; w <= 2; ++w) {
    for (int n = 0; n <= 2; ++n) {
      for (int k = 0; k <= 2; ++k) {
        for (const auto& alpha : all_substitutions(n, k)) {
          for (const auto& r : oracle::all_relations(w, n)) {
            const auto expect = oracle::apply(alpha.map(), k, w, r.tuples());
            CHECK(rel_apply(alpha, r) == oracle::to_relation(w, k, expect));
          }
        }
      }
    }
  }
}

TEST_CASE("composition is functorial") {
  CHECK(compose(Substitution({1, 1}, 1), Substitution({2, 1}, 2)) == Substitution({1, 1}, 1));
  const auto a = Substitution({2, 1, 2}, 2);
  CHECK(compose(Substitution::identity(2), a) == a);
  CHECK(compose(a, Substitution::identity(3)) == a);
  // beta(alpha(r)) = (beta . alpha)(r), exhaustively for |W| = 2 and sorts <= 2.
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= 2; ++k) {
        for (const auto& alpha : all_substitutions(n, m)) {
          for (const auto& beta : all_substitutions(m, k)) {
            const auto gamma = compose(beta, alpha);
            for (const auto& r : oracle::all_relations(2, n)) {
              CHECK(rel_apply(gamma, r) == rel_apply(beta, rel_apply(alpha, r)));
            }
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(compose(Substitution({1}, 1), Substitution({1}, 2)), ArityError);
}

TEST_CASE("boolean operations") {
  CHECK(meet(rel(2, 2, {{0, 1}}), rel(2, 2, {{0, 1}, {1, 1}})) == rel(2, 2, {{0, 1}}));
  CHECK(complement(Relation::bottom(W2, 1)) == rel(2, 1, {{0}, {1}}));
  CHECK(Relation::top(Universe{0}, 0).count() == 1);
  CHECK(Relation::top(Universe{0}, 1) == Relation::bottom(Universe{0}, 1));
  CHECK_THROWS_AS(meet(rel(2, 1, {}), rel(2, 2, {})), ArityError);
  CHECK_THROWS_AS(join(rel(2, 1, {}), rel(3, 1, {})), UniverseMismatch);
  for (const auto& r : oracle::all_relations(2, 2)) {
    CHECK(complement(complement(r)) == r);
    CHECK(meet(r, complement(r)).empty());
    CHECK(join(r, complement(r)) == Relation::top(W2, 2));
  }
}

TEST_CASE("projection of the last coordinate") {
  CHECK(exists_last(rel(2, 2, {{0, 1}})) == rel(2, 1, {{0}}));
  CHECK(exists_last(rel(2, 2, {{0, 0}, {1, 0}})) == rel(2, 1, {{0}, {1}}));
  CHECK(exists_last(Relation::bottom(W2, 3)) == Relation::bottom(W2, 2));
  CHECK_THROWS_AS(exists_last(Relation::top(W2, 0)), ArityError);
  for (std::size_t w = 0; w <= 2; ++w) {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& r : oracle::all_relations(w, n + 1)) {
        CHECK(exists_last(r) == oracle::to_relation(w, n, oracle::project(n, w, r.tuples())));
      }
    }
  }
}

TEST_CASE("projection is left adjoint to the associated cylindrification") {
  for (std::size_t w = 0; w <= 2; ++w) {
    for (int n = 0; n <= 1; ++n) {
      const auto c = assoc_cylindrification(n);
      for (const auto& r : oracle::all_relations(w, n + 1)) {
        for (const auto& s : oracle::all_relations(w, n)) {
          CHECK(exists_last(r).subset_of(s) == r.subset_of(rel_apply(c, s)));
        }
      }
    }
  }
}

TEST_CASE("diagonals") {
  CHECK(delta(W2, 2, 1, 2) == rel(2, 2, {{0, 0}, {1, 1}}));
  for (int i = 1; i <= 3; ++i) CHECK(delta(W2, 3, i, i) == Relation::top(W2, 3));
  CHECK_THROWS_AS(delta(W2, 2, 0, 1), ArityError);
  CHECK_THROWS_AS(delta(W2, 2, 1, 3), ArityError);
}

TEST_CASE("partitioning cylindrifications") {
  const std::vector<int> b11{1, 1};
  const auto p = partitioning(b11);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == Substitution({1}, 2));
  CHECK(p[1] == Substitution({2}, 2));
  const std::vector<int> single{3};
  CHECK(partitioning(single) == std::vector<Substitution>{Substitution::identity(3)});
  CHECK(partitioning(std::vector<int>{}).empty());
  const std::vector<int> mixed{2, 0, 1};
  const auto q = partitioning(mixed);
  CHECK(q[0] == Substitution({1, 2}, 3));
  CHECK(q[1] == Substitution({}, 3));
  CHECK(q[2] == Substitution({3}, 3));
  for (const auto& s : q) CHECK(s.is_increasing());
}

TEST_CASE("associated cylindrification") {
  CHECK(assoc_cylindrification(0) == Substitution({}, 1));
  CHECK(rel_apply(assoc_cylindrification(0), Relation::top(W2, 0)) == Relation::top(W2, 1));
  CHECK(rel_apply(assoc_cylindrification(0), Relation::bottom(W2, 0)) == Relation::bottom(W2, 1));
  CHECK(rel_apply(assoc_cylindrification(1), rel(2, 1, {{0}})) == rel(2, 2, {{0, 0}, {0, 1}}));
}

TEST_CASE("literal format round trips") {
  CHECK(to_literal(rel(2, 1, {{0}})) == "arity=1 universe=2 {(0)}");
  CHECK(to_literal(Relation::top(Universe{3}, 0)) == "arity=0 universe=3 {()}");
  CHECK(to_literal(rel(2, 2, {{1, 0}, {0, 1}})) == "arity=2 universe=2 {(0,1),(1,0)}");
  for (const auto& r : oracle::all_relations(2, 2)) CHECK(parse_literal(to_literal(r)) == r);
  CHECK_THROWS_AS(parse_literal("arity=1 universe=2 {(2)}"), ParseError);
  CHECK_THROWS_AS(parse_literal("arity=1 {(0)}"), ParseError);
}

TEST_CASE("substitution keys round trip") {
  for (const auto& a : all_substitutions(2, 3)) CHECK(Substitution::parse_key(a.key()) == a);
  CHECK(Substitution({2, 1}, 2).key() == "2->2:[2,1]");
  CHECK_THROWS_AS(Substitution::parse_key("2->2:[3,1]"), Error);
}
