#pragma once

// Order theory of one sort's bounded distributive lattice: join-irreducibles,
// prime filters, and the filter amalgamations used by the representation
// constructions.
//
// Every filter and ideal of a finite lattice is principal and is stored by its
// generator: a filter is up(g), an ideal is down(m). A prime filter is up(j)
// for a join-irreducible j.

#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

struct LatticeOptions {
  /// Check the lattice laws on construction.
  bool verify = true;
  /// Triples checked exhaustively up to this count, sampled above it.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 22;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
};

class SortLattice {
 public:
  /// Throws Error naming the failed law when `opts.verify` is set and the
  /// sort is not a bounded distributive lattice.
  SortLattice(const FiniteAlgebra& algebra, int sort, LatticeOptions opts = {});

  const FiniteAlgebra& algebra() const { return *algebra_; }
  int sort() const { return sort_; }
  std::uint64_t size() const { return size_; }

  /// Ascending in the canonical element order. O(size^2).
  const std::vector<Elem>& join_irreducibles() const;

 private:
  const FiniteAlgebra* algebra_;
  int sort_;
  std::uint64_t size_;
  mutable std::optional<std::vector<Elem>> irreducibles_;
};

struct Filter {
  int sort = 0;
  Elem generator = 0;
};

struct Ideal {
  int sort = 0;
  Elem generator = 0;
};

struct PrimeFilter {
  int sort = 0;
  Elem generator = 0;  // join-irreducible

  bool contains(const FiniteAlgebra& a, Elem x) const { return a.leq(sort, generator, x); }
  std::vector<Elem> members(const FiniteAlgebra& a) const;

  friend bool operator==(const PrimeFilter&, const PrimeFilter&) = default;
  friend auto operator<=>(const PrimeFilter&, const PrimeFilter&) = default;
};

/// Construction-time postcondition checks (on by default).
struct FilterOptions {
  bool verify = true;
  /// Direct primality checks are quadratic; skipped on sorts larger than this.
  std::uint64_t prime_check_limit = 4096;
};

bool is_join_irreducible(const FiniteAlgebra& a, int sort, Elem j);
std::vector<Elem> join_irreducibles(const FiniteAlgebra& a, int sort);
std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& a, int sort);

/// The direct definition: proper, upward closed, meet closed, and prime.
bool is_prime_filter(const FiniteAlgebra& a, int sort, const std::vector<bool>& membership);
std::vector<bool> membership(const FiniteAlgebra& a, const PrimeFilter& f);

/// Join of everything outside f: the generator of the complementary ideal.
Elem complement_bound(const FiniteAlgebra& a, const PrimeFilter& f);

/// up(j) for the least join-irreducible j with j <= f and j not <= i.
/// Throws PreconditionError when f <= i.
PrimeFilter extend_to_prime(const FiniteAlgebra& a, Filter f, Ideal i);

/// A witnessed failure of axiom (0): the join of c_i(s_i) lies above the meet
/// of c_i(r_i) although no s_i lies above its r_i.
struct AxiomZeroInstance {
  std::vector<int> blocks;
  std::vector<Elem> r, s;
};

class AxiomZeroObstruction : public Error {
 public:
  AxiomZeroObstruction(const std::string& what, AxiomZeroInstance instance)
      : Error(what), instance_(std::move(instance)) {}
  const AxiomZeroInstance& instance() const { return instance_; }

 private:
  AxiomZeroInstance instance_;
};

/// A filter construction whose generator fell inside its ideal bound, which
/// the hypotheses of the construction rule out.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

/// One prime filter G on sort k_1+...+k_m with c_i(r) in G iff r in F^i.
PrimeFilter sum_filters(const FiniteAlgebra& a, const std::vector<PrimeFilter>& filters, FilterOptions opts = {});

/// G on sort n+1 with r in G and c(u) in G iff u in F. Requires exists(r) in F.
PrimeFilter project_filter(const FiniteAlgebra& a, const PrimeFilter& f, Elem r, FilterOptions opts = {});

/// {u : alpha(u) in p} on sort alpha.dom(), where p lives on sort alpha.cod().
PrimeFilter pullback_along(const FiniteAlgebra& a, const PrimeFilter& p, const Substitution& alpha,
                           FilterOptions opts = {});
/// Pullback along the associated cylindrification c : n -> n+1.
PrimeFilter pullback_filter(const FiniteAlgebra& a, const PrimeFilter& g, FilterOptions opts = {});

struct WitnessPair {
  PrimeFilter g;       // on sort k+1
  Substitution alpha;  // k -> p.sort
};

/// H on sort m+n (m = p.sort, n = pairs.size()) with
///   (I)  beta_0(r) in H iff r in p
///   (II) r in G_i implies beta_i(r) in H
/// where beta_0 = [1..m] and beta_i sends l <= k_i to alpha_i(l) and k_i+1 to m+i.
PrimeFilter witness_filter(const FiniteAlgebra& a, const PrimeFilter& p, const std::vector<WitnessPair>& pairs,
                           FilterOptions opts = {});

/// beta_i of witness_filter.
Substitution witness_substitution(const Substitution& alpha, int m, int n, int i);

}  // namespace relalg
