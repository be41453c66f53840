#include "relalg/lattice.hpp"

#include <numeric>
#include <random>

namespace relalg {

namespace {

constexpr std::uint64_t kMaxIrreducibleScan = std::uint64_t{1} << 14;

std::string sort_tag(int sort) { return "sort " + std::to_string(sort); }

// Verifies every lattice law on one choice of (a, b, c).
void check_laws(const FiniteAlgebra& L, int n, Elem a, Elem b, Elem c) {
  auto fail = [&](const char* law) {
    throw Error(sort_tag(n) + " is not a bounded distributive lattice: " + law + " fails at (" + std::to_string(a) +
                ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  const Elem z = L.zero(n), o = L.one(n);
  if (L.meet(n, a, b) != L.meet(n, b, a)) fail("meet commutativity");
  if (L.join(n, a, b) != L.join(n, b, a)) fail("join commutativity");
  if (L.meet(n, a, L.meet(n, b, c)) != L.meet(n, L.meet(n, a, b), c)) fail("meet associativity");
  if (L.join(n, a, L.join(n, b, c)) != L.join(n, L.join(n, a, b), c)) fail("join associativity");
  if (L.meet(n, a, L.join(n, a, b)) != a) fail("absorption");
  if (L.join(n, a, L.meet(n, a, b)) != a) fail("absorption");
  if (L.meet(n, a, L.join(n, b, c)) != L.join(n, L.meet(n, a, b), L.meet(n, a, c))) fail("distributivity");
  if (L.meet(n, a, z) != z || L.join(n, a, o) != o || L.meet(n, a, o) != a || L.join(n, a, z) != a) fail("bounds");
}

}  // namespace

SortLattice::SortLattice(const FiniteAlgebra& algebra, int sort, LatticeOptions opts)
    : algebra_(&algebra), sort_(sort), size_(algebra.size(sort)) {
  if (!opts.verify) return;
  const auto n = size_;
  if (n <= 1 || n * n <= opts.exhaustive_cap / n) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) check_laws(algebra, sort, a, b, c);
      }
    }
    return;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Elem> pick(0, n - 1);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    check_laws(algebra, sort, a, b, c);
  }
}

const std::vector<Elem>& SortLattice::join_irreducibles() const {
  if (!irreducibles_) irreducibles_ = relalg::join_irreducibles(*algebra_, sort_);
  return *irreducibles_;
}

std::vector<Elem> PrimeFilter::members(const FiniteAlgebra& a) const {
  std::vector<Elem> out;
  const auto n = a.size(sort);
  for (Elem x = 0; x < n; ++x) {
    if (contains(a, x)) out.push_back(x);
  }
  return out;
}

bool is_join_irreducible(const FiniteAlgebra& a, int sort, Elem j) {
  const Elem z = a.zero(sort);
  if (j == z) return false;
  const auto n = a.size(sort);
  Elem below = z;
  for (Elem x = 0; x < n; ++x) {
    if (x != j && a.leq(sort, x, j)) below = a.join(sort, below, x);
  }
  return below != j;
}

std::vector<Elem> join_irreducibles(const FiniteAlgebra& a, int sort) {
  const auto n = a.size(sort);
  if (n > kMaxIrreducibleScan) {
    throw ResourceLimit("listing join-irreducibles of " + sort_tag(sort) + " (" + std::to_string(n) +
                        " elements) is quadratic; limit is " + std::to_string(kMaxIrreducibleScan));
  }
  std::vector<Elem> out;
  for (Elem j = 0; j < n; ++j) {
    if (is_join_irreducible(a, sort, j)) out.push_back(j);
  }
  return out;
}

std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& a, int sort) {
  std::vector<PrimeFilter> out;
  for (const Elem j : join_irreducibles(a, sort)) out.push_back(PrimeFilter{sort, j});
  return out;
}

std::vector<bool> membership(const FiniteAlgebra& a, const PrimeFilter& f) {
  const auto n = a.size(f.sort);
  std::vector<bool> m(n);
  for (Elem x = 0; x < n; ++x) m[x] = f.contains(a, x);
  return m;
}

bool is_prime_filter(const FiniteAlgebra& a, int sort, const std::vector<bool>& in) {
  const auto n = a.size(sort);
  if (in.size() != n) throw ArityError("membership vector does not match " + sort_tag(sort));
  if (in[a.zero(sort)] || !in[a.one(sort)]) return false;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (in[x] && a.leq(sort, x, y) && !in[y]) return false;
      if (in[x] && in[y] && !in[a.meet(sort, x, y)]) return false;
      if (!in[x] && !in[y] && in[a.join(sort, x, y)]) return false;
    }
  }
  return true;
}

Elem complement_bound(const FiniteAlgebra& a, const PrimeFilter& f) {
  const auto n = a.size(f.sort);
  Elem m = a.zero(f.sort);
  for (Elem x = 0; x < n; ++x) {
    if (!f.contains(a, x)) m = a.join(f.sort, m, x);
  }
  if (f.contains(a, m)) {
    throw ConstructionFailure("the complement of up(" + std::to_string(f.generator) + ") in " + sort_tag(f.sort) +
                              " is not an ideal");
  }
  return m;
}

PrimeFilter extend_to_prime(const FiniteAlgebra& a, Filter f, Ideal i) {
  if (f.sort != i.sort) throw SortError("filter and ideal live on different sorts");
  const int s = f.sort;
  if (a.leq(s, f.generator, i.generator)) {
    throw PreconditionError("filter up(" + std::to_string(f.generator) + ") meets ideal down(" +
                            std::to_string(i.generator) + ") in " + sort_tag(s));
  }
  const auto n = a.size(s);
  for (Elem j = 0; j < n; ++j) {
    if (a.leq(s, j, f.generator) && !a.leq(s, j, i.generator) && is_join_irreducible(a, s, j)) return {s, j};
  }
  throw ConstructionFailure("no join-irreducible separates the filter from the ideal in " + sort_tag(s) +
                            "; the sort is not distributive");
}

namespace {

void verify_prime(const FiniteAlgebra& a, const PrimeFilter& g, const FilterOptions& opts, const char* what) {
  if (!opts.verify || a.size(g.sort) > opts.prime_check_limit) return;
  if (!is_prime_filter(a, g.sort, membership(a, g))) {
    throw ConstructionFailure(std::string(what) + ": up(" + std::to_string(g.generator) + ") on " + sort_tag(g.sort) +
                              " is not a prime filter");
  }
}

}  // namespace

PrimeFilter sum_filters(const FiniteAlgebra& a, const std::vector<PrimeFilter>& filters, FilterOptions opts) {
  std::vector<int> blocks;
  for (const auto& f : filters) blocks.push_back(f.sort);
  const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  const auto cs = partitioning(blocks);
  Elem gen = a.one(n), bound = a.zero(n);
  AxiomZeroInstance inst{blocks, {}, {}};
  for (std::size_t i = 0; i < filters.size(); ++i) {
    const Elem r = filters[i].generator;
    const Elem s = complement_bound(a, filters[i]);
    inst.r.push_back(r);
    inst.s.push_back(s);
    gen = a.meet(n, gen, a.subst(cs[i], r));
    bound = a.join(n, bound, a.subst(cs[i], s));
  }
  if (a.leq(n, gen, bound)) {
    std::string shape;
    for (std::size_t i = 0; i < blocks.size(); ++i) shape += (i ? "," : "") + std::to_string(blocks[i]);
    throw AxiomZeroObstruction("axiom (0) obstruction: join of c_i(s_i) lies above meet of c_i(r_i) on blocks (" +
                                   shape + ") although no s_i lies above r_i",
                               std::move(inst));
  }
  const auto g = extend_to_prime(a, Filter{n, gen}, Ideal{n, bound});
  if (opts.verify) {
    for (std::size_t i = 0; i < filters.size(); ++i) {
      const auto size = a.size(blocks[i]);
      for (Elem r = 0; r < size; ++r) {
        if (g.contains(a, a.subst(cs[i], r)) != filters[i].contains(a, r)) {
          throw ConstructionFailure("sum filter: block " + std::to_string(i + 1) + " disagrees at element " +
                                    std::to_string(r));
        }
      }
    }
    verify_prime(a, g, opts, "sum filter");
  }
  return g;
}

PrimeFilter project_filter(const FiniteAlgebra& a, const PrimeFilter& f, Elem r, FilterOptions opts) {
  const int n = f.sort;
  if (!f.contains(a, a.exists(n, r))) {
    throw PreconditionError("project filter: exists(r) is not in the filter for r = " + std::to_string(r));
  }
  const auto c = assoc_cylindrification(n);
  const Elem gen = a.meet(n + 1, r, a.subst(c, f.generator));
  const Elem bound = a.subst(c, complement_bound(a, f));
  if (a.leq(n + 1, gen, bound)) {
    throw ConstructionFailure("project filter: r & c(min F) lies below c(max complement F)");
  }
  const auto g = extend_to_prime(a, Filter{n + 1, gen}, Ideal{n + 1, bound});
  if (opts.verify) {
    if (!g.contains(a, r)) throw ConstructionFailure("project filter: r is not in G");
    const auto size = a.size(n);
    for (Elem u = 0; u < size; ++u) {
      if (g.contains(a, a.subst(c, u)) != f.contains(a, u)) {
        throw ConstructionFailure("project filter: c(u) in G disagrees with u in F at u = " + std::to_string(u));
      }
    }
    verify_prime(a, g, opts, "project filter");
  }
  return g;
}

PrimeFilter pullback_along(const FiniteAlgebra& a, const PrimeFilter& p, const Substitution& alpha,
                           FilterOptions opts) {
  if (alpha.cod() != p.sort) throw SortError("pullback: substitution " + alpha.key() + " does not land in " + sort_tag(p.sort));
  const int k = alpha.dom();
  const auto size = a.size(k);
  std::vector<bool> in(size);
  Elem gen = a.one(k);
  for (Elem u = 0; u < size; ++u) {
    in[u] = p.contains(a, a.subst(alpha, u));
    if (in[u]) gen = a.meet(k, gen, u);
  }
  const PrimeFilter out{k, gen};
  if (opts.verify) {
    for (Elem u = 0; u < size; ++u) {
      if (in[u] != out.contains(a, u)) {
        throw ConstructionFailure("pullback along " + alpha.key() + " is not the principal filter of its meet");
      }
    }
    if (in[a.zero(k)]) throw ConstructionFailure("pullback along " + alpha.key() + " is improper");
    verify_prime(a, out, opts, "pullback");
  }
  return out;
}

PrimeFilter pullback_filter(const FiniteAlgebra& a, const PrimeFilter& g, FilterOptions opts) {
  if (g.sort < 1) throw SortError("pullback_filter needs a filter on sort at least 1");
  return pullback_along(a, g, assoc_cylindrification(g.sort - 1), opts);
}

Substitution witness_substitution(const Substitution& alpha, int m, int n, int i) {
  std::vector<int> map = alpha.map();
  map.push_back(m + i);
  return Substitution(std::move(map), m + n);
}

PrimeFilter witness_filter(const FiniteAlgebra& a, const PrimeFilter& p, const std::vector<WitnessPair>& pairs,
                           FilterOptions opts) {
  const int m = p.sort;
  const int n = static_cast<int>(pairs.size());
  std::vector<int> ids(static_cast<std::size_t>(m));
  std::iota(ids.begin(), ids.end(), 1);
  const Substitution beta0(std::move(ids), m + n);

  std::vector<Substitution> betas;
  Elem gen = a.subst(beta0, p.generator);
  for (int i = 1; i <= n; ++i) {
    const auto& [g, alpha] = pairs[static_cast<std::size_t>(i - 1)];
    if (alpha.cod() != m || g.sort != alpha.dom() + 1) {
      throw PreconditionError("witness pair " + std::to_string(i) + " is not well sorted");
    }
    if (!(pullback_filter(a, g, opts) == pullback_along(a, p, alpha, opts))) {
      throw PreconditionError("witness pair " + std::to_string(i) + ": c^-1(G) differs from the type of the tuple " +
                              alpha.to_string());
    }
    betas.push_back(witness_substitution(alpha, m, n, i));
    gen = a.meet(m + n, gen, a.subst(betas.back(), g.generator));
  }
  const Elem bound = a.subst(beta0, complement_bound(a, p));
  if (a.leq(m + n, gen, bound)) {
    throw ConstructionFailure("witness filter: the generator lies below beta_0(max complement p); the algebra "
                              "violates one of axioms (9), (10)");
  }
  const auto h = extend_to_prime(a, Filter{m + n, gen}, Ideal{m + n, bound});
  if (opts.verify) {
    const auto size = a.size(m);
    for (Elem r = 0; r < size; ++r) {
      if (h.contains(a, a.subst(beta0, r)) != p.contains(a, r)) {
        throw ConstructionFailure("witness filter: condition (I) fails at r = " + std::to_string(r));
      }
    }
    for (int i = 1; i <= n; ++i) {
      const auto& g = pairs[static_cast<std::size_t>(i - 1)].g;
      const auto gsize = a.size(g.sort);
      for (Elem r = 0; r < gsize; ++r) {
        if (g.contains(a, r) && !h.contains(a, a.subst(betas[static_cast<std::size_t>(i - 1)], r))) {
          throw ConstructionFailure("witness filter: condition (II) fails for pair " + std::to_string(i) +
                                    " at r = " + std::to_string(r));
        }
      }
    }
    verify_prime(a, h, opts, "witness filter");
  }
  return h;
}

}  // namespace relalg
