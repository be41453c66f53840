#include "relalg/morphism.hpp"

namespace relalg {

const Relation& RelationalMap::operator()(int sort, Elem e) const {
  if (sort < 0 || sort > max_sort()) throw SortError("map has no sort " + std::to_string(sort));
  return images[static_cast<std::size_t>(sort)].at(e);
}

Elem MorphismMap::operator()(int sort, Elem e) const {
  if (sort < 0 || sort > max_sort()) throw SortError("map has no sort " + std::to_string(sort));
  return images[static_cast<std::size_t>(sort)].at(e);
}

namespace {

struct RelationTarget {
  const RelationalMap& phi;

  using Value = Relation;
  Value image(int sort, Elem e) const { return phi(sort, e); }
  Value zero(int n) const { return Relation::bottom(phi.universe, n); }
  Value one(int n) const { return Relation::top(phi.universe, n); }
  Value meet(int, const Value& a, const Value& b) const { return relalg::meet(a, b); }
  Value join(int, const Value& a, const Value& b) const { return relalg::join(a, b); }
  Value neg(int, const Value& a) const { return complement(a); }
  Value subst(const Substitution& alpha, const Value& a) const { return rel_apply(alpha, a); }
  Value exists(int, const Value& a) const { return exists_last(a); }
  Value delta(int n, int i, int j) const { return relalg::delta(phi.universe, n, i, j); }
  bool leq(int, const Value& a, const Value& b) const { return a.subset_of(b); }
  std::string show(int, const Value& a) const { return to_literal(a); }
};

struct AlgebraTarget {
  const MorphismMap& f;
  const FiniteAlgebra& dst;

  using Value = Elem;
  Value image(int sort, Elem e) const { return f(sort, e); }
  Value zero(int n) const { return dst.zero(n); }
  Value one(int n) const { return dst.one(n); }
  Value meet(int n, Value a, Value b) const { return dst.meet(n, a, b); }
  Value join(int n, Value a, Value b) const { return dst.join(n, a, b); }
  Value neg(int n, Value a) const { return dst.neg(n, a); }
  Value subst(const Substitution& alpha, Value a) const { return dst.subst(alpha, a); }
  Value exists(int n, Value a) const { return dst.exists(n, a); }
  Value delta(int n, int i, int j) const { return dst.delta(n, i, j); }
  bool leq(int n, Value a, Value b) const { return dst.leq(n, a, b); }
  std::string show(int n, Value a) const { return dst.describe(n, a); }
};

template <class Target>
MorphismCheck check(const FiniteAlgebra& src, const Target& t, Fragment frag, MorphismMode mode, int max_sort) {
  MorphismCheck out;
  auto fail = [&](std::string condition, std::string detail) {
    out.violation = MorphismViolation{std::move(condition), std::move(detail)};
  };
  auto el = [&](int n, Elem a) { return src.describe(n, a) + " (sort " + std::to_string(n) + ")"; };

  for (int n = 0; n <= max_sort; ++n) {
    const auto size = src.size(n);
    ++out.conditions;
    if (!(t.image(n, src.zero(n)) == t.zero(n))) {
      fail("zero", "phi(0) = " + t.show(n, t.image(n, src.zero(n))) + " in sort " + std::to_string(n));
      return out;
    }
    ++out.conditions;
    if (!(t.image(n, src.one(n)) == t.one(n))) {
      fail("one", "phi(1) = " + t.show(n, t.image(n, src.one(n))) + " in sort " + std::to_string(n));
      return out;
    }
    std::vector<typename Target::Value> img;
    img.reserve(size);
    for (Elem a = 0; a < size; ++a) img.push_back(t.image(n, a));
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = a; b < size; ++b) {
        out.conditions += 2;
        if (!(img[src.meet(n, a, b)] == t.meet(n, img[a], img[b]))) {
          fail("meet", "phi(a & b) != phi(a) & phi(b) for a = " + el(n, a) + ", b = " + el(n, b));
          return out;
        }
        if (!(img[src.join(n, a, b)] == t.join(n, img[a], img[b]))) {
          fail("join", "phi(a | b) != phi(a) | phi(b) for a = " + el(n, a) + ", b = " + el(n, b));
          return out;
        }
      }
      if (frag.has_negation()) {
        ++out.conditions;
        if (!(img[src.neg(n, a)] == t.neg(n, img[a]))) {
          fail("neg", "phi(~a) != ~phi(a) for a = " + el(n, a));
          return out;
        }
      }
    }
    if (frag.with_equality) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          ++out.conditions;
          if (!(t.image(n, src.delta(n, i, j)) == t.delta(n, i, j))) {
            fail("delta", "phi(delta " + std::to_string(n) + " " + std::to_string(i) + " " + std::to_string(j) +
                              ") is not the diagonal");
            return out;
          }
        }
      }
    }
  }

  for (int n = 0; n <= max_sort; ++n) {
    for (int k = 0; k <= max_sort; ++k) {
      for (const auto& alpha : all_substitutions(n, k)) {
        const auto size = src.size(n);
        for (Elem a = 0; a < size; ++a) {
          ++out.conditions;
          if (!(t.image(k, src.subst(alpha, a)) == t.subst(alpha, t.image(n, a)))) {
            fail("subst", "phi(alpha(a)) != alpha(phi(a)) for alpha = " + alpha.key() + ", a = " + el(n, a));
            return out;
          }
        }
      }
    }
  }

  if (frag.has_exists()) {
    for (int n = 0; n + 1 <= max_sort; ++n) {
      const auto size = src.size(n + 1);
      for (Elem a = 0; a < size; ++a) {
        ++out.conditions;
        const auto lhs = t.exists(n, t.image(n + 1, a));
        const auto rhs = t.image(n, src.exists(n, a));
        const bool good = mode == MorphismMode::Full ? lhs == rhs : t.leq(n, lhs, rhs);
        if (!good) {
          fail("exists", std::string(mode == MorphismMode::Full ? "exists(phi(r)) != phi(exists(r))"
                                                                : "exists(phi(r)) is not contained in phi(exists(r))") +
                             " for r = " + el(n + 1, a) + ": " + t.show(n, lhs) + " vs " + t.show(n, rhs));
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

MorphismCheck verify_morphism(const RelationalMap& phi, const FiniteAlgebra& src, Fragment frag, MorphismMode mode,
                              int max_sort) {
  if (max_sort > phi.max_sort()) throw SortError("map covers sorts up to " + std::to_string(phi.max_sort()));
  for (int n = 0; n <= max_sort; ++n) {
    const auto& row = phi.images[static_cast<std::size_t>(n)];
    if (row.size() != src.size(n)) throw ArityError("map does not cover sort " + std::to_string(n));
    for (const auto& r : row) {
      if (r.arity() != n || r.universe() != phi.universe) {
        throw ArityError("image in sort " + std::to_string(n) + " has the wrong arity or universe");
      }
    }
  }
  return check(src, RelationTarget{phi}, frag, mode, max_sort);
}

MorphismCheck verify_morphism(const MorphismMap& f, const FiniteAlgebra& src, const FiniteAlgebra& dst, Fragment frag,
                              int max_sort) {
  if (max_sort > f.max_sort()) throw SortError("map covers sorts up to " + std::to_string(f.max_sort()));
  for (int n = 0; n <= max_sort; ++n) {
    const auto& row = f.images[static_cast<std::size_t>(n)];
    if (row.size() != src.size(n)) throw ArityError("map does not cover sort " + std::to_string(n));
    for (const Elem e : row) {
      if (e >= dst.size(n)) throw SortError("image outside the target in sort " + std::to_string(n));
    }
  }
  return check(src, AlgebraTarget{f, dst}, frag, MorphismMode::Full, max_sort);
}

bool injective(const RelationalMap& phi, int max_sort) {
  for (int n = 0; n <= max_sort; ++n) {
    const auto& row = phi.images.at(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        if (row[a] == row[b]) return false;
      }
    }
  }
  return true;
}

bool kernel_contained(const RelationalMap& finer, const RelationalMap& coarser, int max_sort) {
  for (int n = 0; n <= max_sort; ++n) {
    const auto& f = finer.images.at(static_cast<std::size_t>(n));
    const auto& c = coarser.images.at(static_cast<std::size_t>(n));
    if (f.size() != c.size()) throw ArityError("maps differ in sort " + std::to_string(n));
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        if (f[a] == f[b] && !(c[a] == c[b])) return false;
      }
    }
  }
  return true;
}

MorphismMap identity_map(const FiniteAlgebra& a, int max_sort) {
  MorphismMap m;
  for (int n = 0; n <= max_sort; ++n) {
    std::vector<Elem> row(a.size(n));
    for (Elem e = 0; e < row.size(); ++e) row[e] = e;
    m.images.push_back(std::move(row));
  }
  return m;
}

MorphismMap projection(const ProductAlgebra& p, std::size_t i, int max_sort) {
  if (i >= p.factors().size()) throw PreconditionError("product has no factor " + std::to_string(i));
  MorphismMap m;
  for (int n = 0; n <= max_sort; ++n) {
    std::vector<Elem> row(p.size(n));
    for (Elem e = 0; e < row.size(); ++e) row[e] = p.split(n, e)[i];
    m.images.push_back(std::move(row));
  }
  return m;
}

}  // namespace relalg
