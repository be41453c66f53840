#pragma once

// Finite, sort-truncated multisorted algebras.
//
// Every algebra fixes a bound N: sorts 0..N are always available, operations
// whose sorts all lie in 0..N are total. Concrete, product and generated
// algebras can also materialize sorts above N on demand; table algebras can
// only if an extension source was attached. Elements of a sort are the
// indices 0..size-1, and that index order is the canonical element order.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "relalg/formula.hpp"
#include "relalg/fragment.hpp"
#include "relalg/relation.hpp"

namespace relalg {

using Elem = std::uint64_t;

inline constexpr std::uint64_t kDefaultElementCap = std::uint64_t{1} << 20;

class FiniteAlgebra {
 public:
  FiniteAlgebra(Fragment fragment, int max_sort, std::uint64_t element_cap);
  virtual ~FiniteAlgebra() = default;
  FiniteAlgebra(const FiniteAlgebra&) = delete;
  FiniteAlgebra& operator=(const FiniteAlgebra&) = delete;

  Fragment fragment() const { return fragment_; }
  int max_sort() const { return max_sort_; }
  std::uint64_t element_cap() const { return element_cap_; }

  /// Whether sorts above max_sort() can be materialized.
  virtual bool extendable() const = 0;
  virtual std::string provenance() const = 0;

  /// Number of elements of `sort`. Throws InsufficientSorts when the sort is
  /// out of reach.
  std::uint64_t size(int sort) const;
  bool available(int sort) const noexcept;

  Elem zero(int sort) const;
  Elem one(int sort) const;
  Elem meet(int sort, Elem a, Elem b) const;
  Elem join(int sort, Elem a, Elem b) const;
  Elem neg(int sort, Elem a) const;
  /// alpha : dom -> cod sends an element of sort dom to sort cod.
  Elem subst(const Substitution& alpha, Elem a) const;
  /// Projection from sort n+1 to sort n.
  Elem exists(int n, Elem a) const;
  Elem delta(int n, int i, int j) const;

  bool leq(int sort, Elem a, Elem b) const { return meet(sort, a, b) == a; }

  /// Human-readable rendering of an element.
  virtual std::string describe(int sort, Elem e) const;

 protected:
  virtual std::uint64_t do_size(int sort) const = 0;
  virtual Elem do_zero(int sort) const = 0;
  virtual Elem do_one(int sort) const = 0;
  virtual Elem do_meet(int sort, Elem a, Elem b) const = 0;
  virtual Elem do_join(int sort, Elem a, Elem b) const = 0;
  virtual Elem do_neg(int sort, Elem a) const = 0;
  virtual Elem do_subst(const Substitution& alpha, Elem a) const = 0;
  virtual Elem do_exists(int n, Elem a) const = 0;
  virtual Elem do_delta(int n, int i, int j) const = 0;

  /// Fill the cached sizes of sorts 0..max_sort. Call at the end of every
  /// concrete subclass constructor.
  void cache_sizes();

 private:
  void check(int sort, Elem a) const;

  Fragment fragment_;
  int max_sort_;
  std::uint64_t element_cap_;
  std::vector<std::uint64_t> sizes_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// The algebra of all relations on a universe W, truncated at `max_sort`.
/// Element e of sort n is the relation whose tuple bitset is the integer e.
class ConcreteAlgebra final : public FiniteAlgebra {
 public:
  ConcreteAlgebra(Universe w, Fragment fragment, int max_sort, std::uint64_t element_cap = kDefaultElementCap);

  Universe universe() const { return universe_; }
  bool extendable() const override { return true; }
  std::string provenance() const override;
  std::string describe(int sort, Elem e) const override;

  Relation relation(int sort, Elem e) const;
  Elem element(const Relation& r) const;

 protected:
  std::uint64_t do_size(int sort) const override;
  Elem do_zero(int) const override { return 0; }
  Elem do_one(int sort) const override;
  Elem do_meet(int, Elem a, Elem b) const override { return a & b; }
  Elem do_join(int, Elem a, Elem b) const override { return a | b; }
  Elem do_neg(int sort, Elem a) const override;
  Elem do_subst(const Substitution& alpha, Elem a) const override;
  Elem do_exists(int n, Elem a) const override;
  Elem do_delta(int n, int i, int j) const override;

 private:
  Universe universe_;
};

/// Componentwise product. Element index is mixed-radix with component 0 the
/// least significant digit.
class ProductAlgebra final : public FiniteAlgebra {
 public:
  explicit ProductAlgebra(std::vector<AlgebraPtr> factors);

  const std::vector<AlgebraPtr>& factors() const { return factors_; }
  bool extendable() const override;
  std::string provenance() const override;
  std::string describe(int sort, Elem e) const override;

  std::vector<Elem> split(int sort, Elem e) const;
  Elem combine(int sort, const std::vector<Elem>& parts) const;

 protected:
  std::uint64_t do_size(int sort) const override;
  Elem do_zero(int sort) const override;
  Elem do_one(int sort) const override;
  Elem do_meet(int sort, Elem a, Elem b) const override;
  Elem do_join(int sort, Elem a, Elem b) const override;
  Elem do_neg(int sort, Elem a) const override;
  Elem do_subst(const Substitution& alpha, Elem a) const override;
  Elem do_exists(int n, Elem a) const override;
  Elem do_delta(int n, int i, int j) const override;

 private:
  template <class F>
  Elem map_parts(int sort, F&& f) const;

  std::vector<AlgebraPtr> factors_;
};

struct Generator {
  std::string name;
  int sort = 0;
  Elem element = 0;  // in the parent
};

/// Least subset of a parent closed under every in-bounds operation of the
/// fragment. Elements are ordered by their index in the parent; each carries
/// the first term (breadth-first, generators in input order) that reached it.
class GeneratedSubalgebra final : public FiniteAlgebra {
 public:
  GeneratedSubalgebra(AlgebraPtr parent, std::vector<Generator> generators);

  const FiniteAlgebra& parent() const { return *parent_; }
  const std::vector<Generator>& generators() const { return generators_; }
  bool extendable() const override { return parent_->extendable(); }
  std::string provenance() const override;
  std::string describe(int sort, Elem e) const override;

  Elem to_parent(int sort, Elem e) const;
  /// Index of a parent element, if it belongs to the subalgebra.
  std::optional<Elem> from_parent(int sort, Elem parent_element) const;
  TermPtr witness(int sort, Elem e) const;

  struct Closure {
    int bound = 0;
    std::vector<std::vector<Elem>> members;                      // sorted parent indices
    std::vector<std::unordered_map<Elem, Elem>> index;           // parent -> local
    std::vector<std::vector<TermPtr>> witnesses;
  };

 protected:
  std::uint64_t do_size(int sort) const override;
  Elem do_zero(int sort) const override;
  Elem do_one(int sort) const override;
  Elem do_meet(int sort, Elem a, Elem b) const override;
  Elem do_join(int sort, Elem a, Elem b) const override;
  Elem do_neg(int sort, Elem a) const override;
  Elem do_subst(const Substitution& alpha, Elem a) const override;
  Elem do_exists(int n, Elem a) const override;
  Elem do_delta(int n, int i, int j) const override;

 private:
  std::shared_ptr<const Closure> closure_for(int sort) const;
  Elem lift(const Closure& c, int sort, Elem parent_element) const;

  AlgebraPtr parent_;
  std::vector<Generator> generators_;
  std::shared_ptr<const Closure> base_;
  mutable std::mutex extension_mutex_;
  mutable std::shared_ptr<const Closure> extension_;
};

GeneratedSubalgebra::Closure compute_closure(const FiniteAlgebra& parent, const std::vector<Generator>& generators,
                                             int bound);

/// Explicit operation tables for sorts 0..max_sort.
class TableAlgebra final : public FiniteAlgebra {
 public:
  struct SortTable {
    std::uint64_t size = 0;
    Elem zero = 0, one = 0;
    std::vector<Elem> meet, join;  // size * size, row-major
    std::vector<Elem> neg;         // empty unless the fragment has negation
  };

  struct Tables {
    Fragment fragment;
    int max_sort = 0;
    std::vector<SortTable> sorts;
    std::map<Substitution, std::vector<Elem>> subst;
    std::map<int, std::vector<Elem>> exists;  // key n: table for sort n+1 -> n
    std::map<std::tuple<int, int, int>, Elem> delta;
  };

  /// Maps table indices to and from an algebra that can serve sorts above
  /// max_sort. `to_source[s][e]` is the source index of table element e.
  struct Extension {
    AlgebraPtr source;
    std::vector<std::vector<Elem>> to_source;
    std::vector<std::vector<Elem>> from_source;
  };

  explicit TableAlgebra(Tables tables, std::optional<Extension> extension = std::nullopt);

  const Tables& tables() const { return tables_; }
  bool extendable() const override { return extension_.has_value(); }
  std::string provenance() const override { return extension_ ? "tables+extension" : "tables"; }

 protected:
  std::uint64_t do_size(int sort) const override;
  Elem do_zero(int sort) const override;
  Elem do_one(int sort) const override;
  Elem do_meet(int sort, Elem a, Elem b) const override;
  Elem do_join(int sort, Elem a, Elem b) const override;
  Elem do_neg(int sort, Elem a) const override;
  Elem do_subst(const Substitution& alpha, Elem a) const override;
  Elem do_exists(int n, Elem a) const override;
  Elem do_delta(int n, int i, int j) const override;

 private:
  bool in_table(int sort) const { return sort <= tables_.max_sort; }
  Elem out(int sort, Elem e) const;
  Elem in(int sort, Elem e) const;
  const FiniteAlgebra& source() const;

  Tables tables_;
  std::optional<Extension> extension_;
};

// Builders -------------------------------------------------------------------

std::shared_ptr<const ConcreteAlgebra> concrete(Universe w, Fragment fragment, int max_sort,
                                                std::uint64_t element_cap = kDefaultElementCap);
std::shared_ptr<const ProductAlgebra> product(std::vector<AlgebraPtr> factors);
std::shared_ptr<const GeneratedSubalgebra> generated_subalgebra(AlgebraPtr parent, std::vector<Generator> generators);

/// Materialize all tables of `a` for sorts 0..max_sort. With a seed, element
/// indices of every sort are shuffled (an anonymized presentation); with
/// `attach_extension`, `a` stays reachable for sorts above max_sort.
std::shared_ptr<const TableAlgebra> tabulate(const AlgebraPtr& a, std::optional<std::uint64_t> shuffle_seed = {},
                                             bool attach_extension = false);

/// Table-file JSON (see docs/table-format.md).
std::string tables_to_json(const TableAlgebra::Tables& t);
TableAlgebra::Tables tables_from_json(std::string_view text);

}  // namespace relalg
