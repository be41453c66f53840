#pragma once

// Brute-force reference implementations used as test oracles. They work from
// definitions only and share no code paths with the library beyond the
// Relation container.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"
#include "relalg/formula.hpp"
#include "relalg/lattice.hpp"
#include "relalg/relation.hpp"

namespace oracle {

using namespace relalg;

inline std::vector<Tuple> all_tuples(std::size_t w, int arity) {
  std::vector<Tuple> out{Tuple{}};
  for (int i = 0; i < arity; ++i) {
    std::vector<Tuple> next;
    for (const auto& t : out) {
      for (Point p = 0; p < w; ++p) {
        auto u = t;
        u.push_back(p);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline bool has(const std::vector<Tuple>& set, const Tuple& t) {
  for (const auto& u : set) {
    if (u == t) return true;
  }
  return false;
}

/// alpha(r) = { x in W^k : (x_{alpha(1)}, ..., x_{alpha(n)}) in r }.
inline std::vector<Tuple> apply(const std::vector<int>& alpha, int k, std::size_t w, const std::vector<Tuple>& r) {
  std::vector<Tuple> out;
  for (const auto& x : all_tuples(w, k)) {
    Tuple y;
    for (int a : alpha) y.push_back(x[static_cast<std::size_t>(a - 1)]);
    if (has(r, y)) out.push_back(x);
  }
  return out;
}

/// { x : exists y, (x, y) in r }.
inline std::vector<Tuple> project(int n, std::size_t w, const std::vector<Tuple>& r) {
  std::vector<Tuple> out;
  for (const auto& x : all_tuples(w, n)) {
    for (Point y = 0; y < w; ++y) {
      auto xy = x;
      xy.push_back(y);
      if (has(r, xy)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

inline Relation to_relation(std::size_t w, int arity, const std::vector<Tuple>& ts) {
  return Relation::from_tuples(Universe{w}, arity, ts);
}

/// Every subset of W^arity (only for tiny sorts).
inline std::vector<Relation> all_relations(std::size_t w, int arity) {
  const auto tuples = all_tuples(w, arity);
  std::vector<Relation> out;
  const std::uint64_t n = std::uint64_t{1} << tuples.size();
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    std::vector<Tuple> chosen;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if ((bits >> i) & 1u) chosen.push_back(tuples[i]);
    }
    out.push_back(to_relation(w, arity, chosen));
  }
  return out;
}

/// j is nonzero and not the join of two strictly smaller elements.
inline bool join_irreducible(const FiniteAlgebra& a, int sort, Elem j) {
  if (j == a.zero(sort)) return false;
  const auto n = a.size(sort);
  for (Elem x = 0; x < n; ++x) {
    if (x == j || !a.leq(sort, x, j)) continue;
    for (Elem y = 0; y < n; ++y) {
      if (y == j || !a.leq(sort, y, j)) continue;
      if (a.join(sort, x, y) == j) return false;
    }
  }
  return true;
}

/// Subsets of the sort that are proper, nonempty, upward closed, meet closed
/// and prime, by enumeration over all subsets (sizes up to 16).
inline std::vector<std::vector<bool>> prime_filter_sets(const FiniteAlgebra& a, int sort) {
  const auto n = a.size(sort);
  std::vector<std::vector<bool>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<bool> in(n);
    for (Elem x = 0; x < n; ++x) in[x] = (bits >> x) & 1u;
    if (in[a.zero(sort)] || !in[a.one(sort)]) continue;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      for (Elem y = 0; y < n && ok; ++y) {
        if (in[x] && a.leq(sort, x, y) && !in[y]) ok = false;
        if (in[x] && in[y] && !in[a.meet(sort, x, y)]) ok = false;
        if (in[a.join(sort, x, y)] && !in[x] && !in[y]) ok = false;
      }
    }
    if (ok) out.push_back(in);
  }
  return out;
}

/// A subalgebra of concrete(|W|=2, N=2) generated by one to three random
/// elements of sorts 0..2.
inline std::shared_ptr<const GeneratedSubalgebra> random_subalgebra(std::mt19937_64& rng, Fragment frag) {
  auto parent = concrete(Universe{2}, frag, 2);
  std::vector<Generator> gens;
  const int count = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int g = 0; g < count; ++g) {
    const int sort = std::uniform_int_distribution<int>(0, 2)(rng);
    const Elem e = std::uniform_int_distribution<Elem>(0, parent->size(sort) - 1)(rng);
    gens.push_back({"G" + std::to_string(g), sort, e});
  }
  return generated_subalgebra(parent, gens);
}

// Random formulas ---------------------------------------------------------------

/// Text of a random formula over R1/1, R2/2, R3/3 in the given context.
class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  std::string formula(int context, int depth) {
    fresh_ = 0;
    std::vector<std::string> vars;
    for (int i = 0; i < context; ++i) vars.push_back("x" + std::to_string(i));
    std::string head = "[";
    for (int i = 0; i < context; ++i) head += (i ? "," : "") + vars[static_cast<std::size_t>(i)];
    return head + "] " + body(vars, depth);
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::string var(const std::vector<std::string>& vars) {
    return vars[static_cast<std::size_t>(pick(0, static_cast<int>(vars.size()) - 1))];
  }

  std::string atom(const std::vector<std::string>& vars) {
    if (vars.empty()) return pick(0, 1) ? "true" : "false";
    const int choice = pick(0, 5);
    if (choice == 0) return pick(0, 1) ? "true" : "false";
    if (choice == 1) {
      const auto lhs = var(vars);
      return lhs + " = " + var(vars);
    }
    const int arity = pick(1, 3);
    std::string out = "R" + std::to_string(arity) + "(";
    for (int i = 0; i < arity; ++i) out += (i ? "," : "") + var(vars);
    return out + ")";
  }

  std::string body(const std::vector<std::string>& vars, int depth) {
    if (depth == 0) return atom(vars);
    const int choice = pick(0, 5);
    switch (choice) {
      case 0:
        return atom(vars);
      case 1:
        return "~" + body(vars, depth - 1);
      case 2:
      case 3: {
        // Sequenced explicitly so the RNG is consumed left to right.
        const auto lhs = body(vars, depth - 1);
        const auto rhs = body(vars, depth - 1);
        return "(" + lhs + (choice == 2 ? " & " : " | ") + rhs + ")";
      }
      default: {
        // Fresh variable, or requantify one already in the context.
        if (!vars.empty() && pick(0, 3) == 0) {
          const auto v = var(vars);
          return "exists " + v + " " + body(vars, depth - 1);
        }
        auto inner = vars;
        const std::string v = "y" + std::to_string(fresh_++);
        inner.push_back(v);
        return "exists " + v + " " + body(inner, depth - 1);
      }
    }
  }

  std::mt19937_64 rng_;
  int fresh_ = 0;
};

inline Structure random_structure(std::mt19937_64& rng, std::size_t w) {
  Structure s(Universe{w});
  std::bernoulli_distribution coin(0.5);
  for (int arity = 1; arity <= 3; ++arity) {
    std::vector<Tuple> ts;
    for (const auto& t : all_tuples(w, arity)) {
      if (coin(rng)) ts.push_back(t);
    }
    s.assign("R" + std::to_string(arity), to_relation(w, arity, ts));
  }
  return s;
}

}  // namespace oracle
