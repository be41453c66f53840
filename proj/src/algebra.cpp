#include "relalg/algebra.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <random>

namespace relalg {

// Fragment --------------------------------------------------------------------

std::string Fragment::to_string() const {
  std::string s;
  switch (base) {
    case Base::Pqf: s = "pqf"; break;
    case Base::Qf: s = "qf"; break;
    case Base::Pe: s = "pe"; break;
    case Base::Fo: s = "fo"; break;
  }
  return with_equality ? s + "+eq" : s;
}

Fragment Fragment::parse(std::string_view text) {
  Fragment f;
  std::string_view head = text;
  if (const auto plus = text.find('+'); plus != std::string_view::npos) {
    if (text.substr(plus) != "+eq") throw ParseError("unknown fragment suffix '" + std::string(text.substr(plus)) + "'", plus);
    f.with_equality = true;
    head = text.substr(0, plus);
  }
  if (head == "pqf") f.base = Base::Pqf;
  else if (head == "qf") f.base = Base::Qf;
  else if (head == "pe") f.base = Base::Pe;
  else if (head == "fo") f.base = Base::Fo;
  else throw ParseError("unknown fragment '" + std::string(text) + "' (expected pqf, qf, pe or fo, optionally +eq)", 0);
  return f;
}

// FiniteAlgebra ---------------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(Fragment fragment, int max_sort, std::uint64_t element_cap)
    : fragment_(fragment), max_sort_(max_sort), element_cap_(element_cap) {
  if (max_sort < 0) throw PreconditionError("max_sort must be nonnegative");
  if (element_cap == 0) throw PreconditionError("element cap must be positive");
}

void FiniteAlgebra::cache_sizes() {
  sizes_.clear();
  for (int n = 0; n <= max_sort_; ++n) sizes_.push_back(do_size(n));
}

std::uint64_t FiniteAlgebra::size(int sort) const {
  if (sort < 0) throw SortError("negative sort " + std::to_string(sort));
  if (sort <= max_sort_ && static_cast<std::size_t>(sort) < sizes_.size()) return sizes_[static_cast<std::size_t>(sort)];
  if (sort > max_sort_ && !extendable()) {
    throw InsufficientSorts("sort " + std::to_string(sort) + " lies above max sort " + std::to_string(max_sort_) +
                            " and the algebra has no lazy extension");
  }
  try {
    return do_size(sort);
  } catch (const ResourceLimit& e) {
    throw InsufficientSorts("sort " + std::to_string(sort) + " cannot be materialized: " + e.what());
  }
}

bool FiniteAlgebra::available(int sort) const noexcept {
  try {
    size(sort);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void FiniteAlgebra::check(int sort, Elem a) const {
  const auto n = size(sort);
  if (a >= n) {
    throw SortError("element " + std::to_string(a) + " out of range for sort " + std::to_string(sort) + " (size " +
                    std::to_string(n) + ")");
  }
}

Elem FiniteAlgebra::zero(int sort) const {
  size(sort);
  return do_zero(sort);
}

Elem FiniteAlgebra::one(int sort) const {
  size(sort);
  return do_one(sort);
}

Elem FiniteAlgebra::meet(int sort, Elem a, Elem b) const {
  check(sort, a);
  check(sort, b);
  return do_meet(sort, a, b);
}

Elem FiniteAlgebra::join(int sort, Elem a, Elem b) const {
  check(sort, a);
  check(sort, b);
  return do_join(sort, a, b);
}

Elem FiniteAlgebra::neg(int sort, Elem a) const {
  if (!fragment_.has_negation()) throw FragmentError("negation is not in fragment " + fragment_.to_string());
  check(sort, a);
  return do_neg(sort, a);
}

Elem FiniteAlgebra::subst(const Substitution& alpha, Elem a) const {
  check(alpha.dom(), a);
  size(alpha.cod());
  return do_subst(alpha, a);
}

Elem FiniteAlgebra::exists(int n, Elem a) const {
  if (!fragment_.has_exists()) {
    throw FragmentError("existential quantification is not in fragment " + fragment_.to_string());
  }
  if (n < 0) throw SortError("exists into negative sort");
  check(n + 1, a);
  size(n);
  return do_exists(n, a);
}

Elem FiniteAlgebra::delta(int n, int i, int j) const {
  if (!fragment_.with_equality) throw FragmentError("equality is not in fragment " + fragment_.to_string());
  if (i < 1 || j < 1 || i > n || j > n) {
    throw SortError("delta " + std::to_string(n) + " " + std::to_string(i) + " " + std::to_string(j) +
                    ": index out of range");
  }
  size(n);
  return do_delta(n, i, j);
}

std::string FiniteAlgebra::describe(int sort, Elem e) const {
  check(sort, e);
  return "#" + std::to_string(e);
}

// ConcreteAlgebra -------------------------------------------------------------

namespace {

std::uint64_t concrete_bits(Universe w, int n) {
  const auto bits = tuple_count(w, n);
  if (bits >= 63) throw ResourceLimit("sort " + std::to_string(n) + " has 2^" + std::to_string(bits) + " elements");
  return bits;
}

}  // namespace

ConcreteAlgebra::ConcreteAlgebra(Universe w, Fragment fragment, int max_sort, std::uint64_t element_cap)
    : FiniteAlgebra(fragment, max_sort, element_cap), universe_(w) {
  cache_sizes();
}

std::string ConcreteAlgebra::provenance() const { return "concrete(" + std::to_string(universe_.size) + ")"; }

std::uint64_t ConcreteAlgebra::do_size(int sort) const {
  const auto bits = concrete_bits(universe_, sort);
  const std::uint64_t n = std::uint64_t{1} << bits;
  if (n > element_cap()) {
    throw ResourceLimit("sort " + std::to_string(sort) + " of concrete(" + std::to_string(universe_.size) + ") has " +
                        std::to_string(n) + " elements, above the cap " + std::to_string(element_cap()));
  }
  return n;
}

Elem ConcreteAlgebra::do_one(int sort) const { return (std::uint64_t{1} << concrete_bits(universe_, sort)) - 1; }

Elem ConcreteAlgebra::do_neg(int sort, Elem a) const { return ~a & do_one(sort); }

Elem ConcreteAlgebra::do_subst(const Substitution& alpha, Elem a) const {
  // Bit x of the result is bit tuple_apply(alpha, x) of a.
  const std::uint64_t w = universe_.size;
  const int k = alpha.cod();
  const int n = alpha.dom();
  const auto out_bits = tuple_count(universe_, k);
  if (k > 64) return rel_apply(alpha, Relation::from_word(universe_, n, a)).to_word();
  std::array<std::uint64_t, 64> weight{};  // weight of target coordinate l in the source index
  for (int i = 1; i <= n; ++i) {
    std::uint64_t p = 1;
    for (int e = i; e < n; ++e) p *= w;
    weight[static_cast<std::size_t>(alpha(i) - 1)] += p;
  }
  std::array<std::uint64_t, 64> digit{};
  std::uint64_t src = 0;
  Elem out = 0;
  for (std::uint64_t x = 0; x < out_bits; ++x) {
    if ((a >> src) & 1u) out |= std::uint64_t{1} << x;
    // Odometer over x, big-endian: coordinate k is the least significant.
    for (int l = k - 1; l >= 0; --l) {
      const auto li = static_cast<std::size_t>(l);
      if (++digit[li] < w) {
        src += weight[li];
        break;
      }
      src -= weight[li] * (w - 1);
      digit[li] = 0;
    }
  }
  return out;
}

Elem ConcreteAlgebra::do_exists(int n, Elem a) const {
  const std::uint64_t w = universe_.size;
  const auto out_bits = tuple_count(universe_, n);
  Elem out = 0;
  for (std::uint64_t x = 0; x < out_bits; ++x) {
    const Elem block = w == 0 ? 0 : (a >> (x * w)) & ((std::uint64_t{1} << w) - 1);
    if (block) out |= std::uint64_t{1} << x;
  }
  return out;
}

Elem ConcreteAlgebra::do_delta(int n, int i, int j) const { return relalg::delta(universe_, n, i, j).to_word(); }

Relation ConcreteAlgebra::relation(int sort, Elem e) const {
  size(sort);
  return Relation::from_word(universe_, sort, e);
}

Elem ConcreteAlgebra::element(const Relation& r) const {
  if (r.universe() != universe_) throw UniverseMismatch("relation is over a different universe");
  size(r.arity());
  return r.to_word();
}

std::string ConcreteAlgebra::describe(int sort, Elem e) const {
  const auto lit = to_literal(relation(sort, e));
  return lit.substr(lit.find('{'));
}

// ProductAlgebra --------------------------------------------------------------

namespace {

Fragment common_fragment(const std::vector<AlgebraPtr>& factors) {
  if (factors.empty()) throw PreconditionError("product of an empty list");
  for (const auto& f : factors) {
    if (!(f->fragment() == factors[0]->fragment())) throw PreconditionError("product factors differ in fragment");
    if (f->max_sort() != factors[0]->max_sort()) throw PreconditionError("product factors differ in max sort");
  }
  return factors[0]->fragment();
}

std::uint64_t common_cap(const std::vector<AlgebraPtr>& factors) {
  common_fragment(factors);
  std::uint64_t cap = 0;
  for (const auto& f : factors) cap = std::max(cap, f->element_cap());
  return cap;
}

}  // namespace

ProductAlgebra::ProductAlgebra(std::vector<AlgebraPtr> factors)
    : FiniteAlgebra(common_fragment(factors), factors.at(0)->max_sort(), common_cap(factors)),
      factors_(std::move(factors)) {
  cache_sizes();
}

bool ProductAlgebra::extendable() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const AlgebraPtr& f) { return f->extendable(); });
}

std::string ProductAlgebra::provenance() const {
  std::string s = "product(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ",";
    s += factors_[i]->provenance();
  }
  return s + ")";
}

std::uint64_t ProductAlgebra::do_size(int sort) const {
  std::uint64_t n = 1;
  for (const auto& f : factors_) {
    const auto s = f->size(sort);
    if (s != 0 && n > element_cap() / s) {
      throw ResourceLimit("product sort " + std::to_string(sort) + " exceeds the element cap");
    }
    n *= s;
  }
  if (n > element_cap()) throw ResourceLimit("product sort " + std::to_string(sort) + " exceeds the element cap");
  return n;
}

std::vector<Elem> ProductAlgebra::split(int sort, Elem e) const {
  std::vector<Elem> parts;
  parts.reserve(factors_.size());
  for (const auto& f : factors_) {
    const auto s = f->size(sort);
    parts.push_back(e % s);
    e /= s;
  }
  return parts;
}

Elem ProductAlgebra::combine(int sort, const std::vector<Elem>& parts) const {
  if (parts.size() != factors_.size()) throw ArityError("wrong number of product components");
  Elem e = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) e = e * factors_[i]->size(sort) + parts[i];
  return e;
}

template <class F>
Elem ProductAlgebra::map_parts(int sort, F&& f) const {
  std::vector<Elem> parts(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) parts[i] = f(i);
  return combine(sort, parts);
}

Elem ProductAlgebra::do_zero(int sort) const {
  return map_parts(sort, [&](std::size_t i) { return factors_[i]->zero(sort); });
}

Elem ProductAlgebra::do_one(int sort) const {
  return map_parts(sort, [&](std::size_t i) { return factors_[i]->one(sort); });
}

Elem ProductAlgebra::do_meet(int sort, Elem a, Elem b) const {
  const auto x = split(sort, a), y = split(sort, b);
  return map_parts(sort, [&](std::size_t i) { return factors_[i]->meet(sort, x[i], y[i]); });
}

Elem ProductAlgebra::do_join(int sort, Elem a, Elem b) const {
  const auto x = split(sort, a), y = split(sort, b);
  return map_parts(sort, [&](std::size_t i) { return factors_[i]->join(sort, x[i], y[i]); });
}

Elem ProductAlgebra::do_neg(int sort, Elem a) const {
  const auto x = split(sort, a);
  return map_parts(sort, [&](std::size_t i) { return factors_[i]->neg(sort, x[i]); });
}

Elem ProductAlgebra::do_subst(const Substitution& alpha, Elem a) const {
  const auto x = split(alpha.dom(), a);
  return map_parts(alpha.cod(), [&](std::size_t i) { return factors_[i]->subst(alpha, x[i]); });
}

Elem ProductAlgebra::do_exists(int n, Elem a) const {
  const auto x = split(n + 1, a);
  return map_parts(n, [&](std::size_t i) { return factors_[i]->exists(n, x[i]); });
}

Elem ProductAlgebra::do_delta(int n, int i, int j) const {
  return map_parts(n, [&](std::size_t f) { return factors_[f]->delta(n, i, j); });
}

std::string ProductAlgebra::describe(int sort, Elem e) const {
  const auto x = split(sort, e);
  std::string s = "<";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " | ";
    s += factors_[i]->describe(sort, x[i]);
  }
  return s + ">";
}

// GeneratedSubalgebra ---------------------------------------------------------

GeneratedSubalgebra::Closure compute_closure(const FiniteAlgebra& parent, const std::vector<Generator>& generators,
                                             int bound) {
  const auto frag = parent.fragment();
  const auto sorts = static_cast<std::size_t>(bound + 1);
  std::vector<std::unordered_map<Elem, TermPtr>> found(sorts);
  std::vector<std::vector<Elem>> processed(sorts);
  std::deque<std::pair<int, Elem>> queue;

  auto add = [&](int sort, Elem e, const auto& make_term) {
    auto& f = found[static_cast<std::size_t>(sort)];
    if (f.count(e)) return;
    f.emplace(e, make_term());
    queue.emplace_back(sort, e);
  };

  for (const auto& g : generators) {
    if (g.sort < 0 || g.sort > bound) {
      throw SortError("generator " + g.name + " has sort " + std::to_string(g.sort) + " outside 0.." +
                      std::to_string(bound));
    }
    if (g.element >= parent.size(g.sort)) throw SortError("generator " + g.name + " is not an element of the parent");
    add(g.sort, g.element, [&] { return Term::sym(g.name, g.sort); });
  }
  for (int n = 0; n <= bound; ++n) {
    add(n, parent.zero(n), [&] { return Term::bot(n); });
    add(n, parent.one(n), [&] { return Term::top(n); });
    if (frag.with_equality) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) add(n, parent.delta(n, i, j), [&] { return Term::delta(n, i, j); });
      }
    }
  }

  std::vector<std::vector<std::vector<Substitution>>> substs(sorts, std::vector<std::vector<Substitution>>(sorts));
  for (int n = 0; n <= bound; ++n) {
    for (int k = 0; k <= bound; ++k) {
      substs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = all_substitutions(n, k);
    }
  }

  while (!queue.empty()) {
    const auto [n, x] = queue.front();
    queue.pop_front();
    const auto ns = static_cast<std::size_t>(n);
    const TermPtr t = found[ns].at(x);
    if (frag.has_negation()) add(n, parent.neg(n, x), [&] { return Term::neg(t); });
    for (int k = 0; k <= bound; ++k) {
      for (const auto& alpha : substs[ns][static_cast<std::size_t>(k)]) {
        add(k, parent.subst(alpha, x), [&] { return Term::apply(alpha, t); });
      }
    }
    if (frag.has_exists() && n >= 1) add(n - 1, parent.exists(n - 1, x), [&] { return Term::exists(t); });
    processed[ns].push_back(x);
    for (const Elem y : processed[ns]) {
      const TermPtr u = found[ns].at(y);
      add(n, parent.meet(n, x, y), [&] { return Term::conj(t, u); });
      add(n, parent.join(n, x, y), [&] { return Term::disj(t, u); });
    }
  }

  GeneratedSubalgebra::Closure c;
  c.bound = bound;
  c.members.resize(sorts);
  c.index.resize(sorts);
  c.witnesses.resize(sorts);
  for (std::size_t n = 0; n < sorts; ++n) {
    auto& m = c.members[n];
    m = processed[n];
    std::sort(m.begin(), m.end());
    for (std::size_t i = 0; i < m.size(); ++i) {
      c.index[n].emplace(m[i], static_cast<Elem>(i));
      c.witnesses[n].push_back(found[n].at(m[i]));
    }
  }
  return c;
}

GeneratedSubalgebra::GeneratedSubalgebra(AlgebraPtr parent, std::vector<Generator> generators)
    : FiniteAlgebra(parent->fragment(), parent->max_sort(), parent->element_cap()),
      parent_(std::move(parent)),
      generators_(std::move(generators)) {
  base_ = std::make_shared<const Closure>(compute_closure(*parent_, generators_, max_sort()));
  cache_sizes();
}

std::string GeneratedSubalgebra::provenance() const {
  std::string s = "generated(" + parent_->provenance() + ";";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ",";
    s += generators_[i].name;
  }
  return s + ")";
}

std::shared_ptr<const GeneratedSubalgebra::Closure> GeneratedSubalgebra::closure_for(int sort) const {
  if (sort <= max_sort()) return base_;
  std::lock_guard lock(extension_mutex_);
  if (extension_ && extension_->bound >= sort) return extension_;
  auto next = std::make_shared<const Closure>(compute_closure(*parent_, generators_, sort));
  // Earlier sorts must not change, or elements already handed out would be renumbered.
  const auto& prev = extension_ ? *extension_ : *base_;
  for (int n = 0; n <= prev.bound; ++n) {
    if (next->members[static_cast<std::size_t>(n)] != prev.members[static_cast<std::size_t>(n)]) {
      throw InsufficientSorts("materializing sort " + std::to_string(sort) +
                              " would enlarge the generated subalgebra at sort " + std::to_string(n));
    }
  }
  extension_ = next;
  return next;
}

Elem GeneratedSubalgebra::lift(const Closure& c, int sort, Elem parent_element) const {
  const auto& idx = c.index[static_cast<std::size_t>(sort)];
  auto it = idx.find(parent_element);
  if (it == idx.end()) throw Error("operation left the generated subalgebra at sort " + std::to_string(sort));
  return it->second;
}

Elem GeneratedSubalgebra::to_parent(int sort, Elem e) const {
  size(sort);
  const auto c = closure_for(sort);
  return c->members[static_cast<std::size_t>(sort)].at(e);
}

std::optional<Elem> GeneratedSubalgebra::from_parent(int sort, Elem parent_element) const {
  size(sort);
  const auto c = closure_for(sort);
  const auto& idx = c->index[static_cast<std::size_t>(sort)];
  auto it = idx.find(parent_element);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

TermPtr GeneratedSubalgebra::witness(int sort, Elem e) const {
  size(sort);
  const auto c = closure_for(sort);
  return c->witnesses[static_cast<std::size_t>(sort)].at(e);
}

std::uint64_t GeneratedSubalgebra::do_size(int sort) const {
  if (sort > max_sort() && !parent_->available(sort)) {
    throw ResourceLimit("parent cannot materialize sort " + std::to_string(sort));
  }
  return closure_for(sort)->members[static_cast<std::size_t>(sort)].size();
}

Elem GeneratedSubalgebra::do_zero(int sort) const {
  const auto c = closure_for(sort);
  return lift(*c, sort, parent_->zero(sort));
}

Elem GeneratedSubalgebra::do_one(int sort) const {
  const auto c = closure_for(sort);
  return lift(*c, sort, parent_->one(sort));
}

Elem GeneratedSubalgebra::do_meet(int sort, Elem a, Elem b) const {
  const auto c = closure_for(sort);
  const auto& m = c->members[static_cast<std::size_t>(sort)];
  return lift(*c, sort, parent_->meet(sort, m[a], m[b]));
}

Elem GeneratedSubalgebra::do_join(int sort, Elem a, Elem b) const {
  const auto c = closure_for(sort);
  const auto& m = c->members[static_cast<std::size_t>(sort)];
  return lift(*c, sort, parent_->join(sort, m[a], m[b]));
}

Elem GeneratedSubalgebra::do_neg(int sort, Elem a) const {
  const auto c = closure_for(sort);
  return lift(*c, sort, parent_->neg(sort, c->members[static_cast<std::size_t>(sort)][a]));
}

Elem GeneratedSubalgebra::do_subst(const Substitution& alpha, Elem a) const {
  const auto c = closure_for(std::max(alpha.dom(), alpha.cod()));
  return lift(*c, alpha.cod(), parent_->subst(alpha, c->members[static_cast<std::size_t>(alpha.dom())][a]));
}

Elem GeneratedSubalgebra::do_exists(int n, Elem a) const {
  const auto c = closure_for(n + 1);
  return lift(*c, n, parent_->exists(n, c->members[static_cast<std::size_t>(n + 1)][a]));
}

Elem GeneratedSubalgebra::do_delta(int n, int i, int j) const {
  const auto c = closure_for(n);
  return lift(*c, n, parent_->delta(n, i, j));
}

std::string GeneratedSubalgebra::describe(int sort, Elem e) const {
  return parent_->describe(sort, to_parent(sort, e));
}

// TableAlgebra ----------------------------------------------------------------

namespace {

[[noreturn]] void bad_table(const std::string& what) { throw Error("table algebra: " + what); }

void check_entries(const std::vector<Elem>& v, std::uint64_t len, std::uint64_t bound, const std::string& what) {
  if (v.size() != len) bad_table(what + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(len));
  for (const Elem e : v) {
    if (e >= bound) bad_table(what + " contains out-of-range element " + std::to_string(e));
  }
}

}  // namespace

TableAlgebra::TableAlgebra(Tables tables, std::optional<Extension> extension)
    : FiniteAlgebra(tables.fragment, tables.max_sort, kDefaultElementCap),
      tables_(std::move(tables)),
      extension_(std::move(extension)) {
  const auto& t = tables_;
  if (t.sorts.size() != static_cast<std::size_t>(t.max_sort + 1)) {
    bad_table("expected " + std::to_string(t.max_sort + 1) + " sort tables, got " + std::to_string(t.sorts.size()));
  }
  for (std::size_t n = 0; n < t.sorts.size(); ++n) {
    const auto& s = t.sorts[n];
    const auto tag = "sort " + std::to_string(n);
    if (s.size == 0) bad_table(tag + " is empty");
    if (s.zero >= s.size || s.one >= s.size) bad_table(tag + " has out-of-range constants");
    check_entries(s.meet, s.size * s.size, s.size, tag + " meet");
    check_entries(s.join, s.size * s.size, s.size, tag + " join");
    if (t.fragment.has_negation()) check_entries(s.neg, s.size, s.size, tag + " neg");
  }
  for (int n = 0; n <= t.max_sort; ++n) {
    for (int k = 0; k <= t.max_sort; ++k) {
      for (const auto& alpha : all_substitutions(n, k)) {
        auto it = t.subst.find(alpha);
        if (it == t.subst.end()) bad_table("missing substitution table " + alpha.key());
        check_entries(it->second, t.sorts[static_cast<std::size_t>(n)].size, t.sorts[static_cast<std::size_t>(k)].size,
                      "substitution " + alpha.key());
      }
    }
  }
  if (t.fragment.has_exists()) {
    for (int n = 0; n + 1 <= t.max_sort; ++n) {
      auto it = t.exists.find(n);
      if (it == t.exists.end()) bad_table("missing exists table " + std::to_string(n));
      check_entries(it->second, t.sorts[static_cast<std::size_t>(n + 1)].size, t.sorts[static_cast<std::size_t>(n)].size,
                    "exists " + std::to_string(n));
    }
  }
  if (t.fragment.with_equality) {
    for (int n = 0; n <= t.max_sort; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          auto it = t.delta.find({n, i, j});
          if (it == t.delta.end() || it->second >= t.sorts[static_cast<std::size_t>(n)].size) {
            bad_table("missing or invalid delta " + std::to_string(n) + ":" + std::to_string(i) + "," +
                      std::to_string(j));
          }
        }
      }
    }
  }
  if (extension_) {
    if (!(extension_->source->fragment() == t.fragment)) bad_table("extension source has a different fragment");
    if (extension_->to_source.size() != t.sorts.size() || extension_->from_source.size() != t.sorts.size()) {
      bad_table("extension maps do not cover every sort");
    }
  }
  cache_sizes();
}

const FiniteAlgebra& TableAlgebra::source() const {
  if (!extension_) throw InsufficientSorts("table algebra has no extension source");
  return *extension_->source;
}

Elem TableAlgebra::in(int sort, Elem e) const {
  if (!in_table(sort)) return e;
  return extension_->to_source[static_cast<std::size_t>(sort)].at(e);
}

Elem TableAlgebra::out(int sort, Elem e) const {
  if (!in_table(sort)) return e;
  return extension_->from_source[static_cast<std::size_t>(sort)].at(e);
}

std::uint64_t TableAlgebra::do_size(int sort) const {
  if (in_table(sort)) return tables_.sorts[static_cast<std::size_t>(sort)].size;
  return source().size(sort);
}

Elem TableAlgebra::do_zero(int sort) const {
  if (in_table(sort)) return tables_.sorts[static_cast<std::size_t>(sort)].zero;
  return source().zero(sort);
}

Elem TableAlgebra::do_one(int sort) const {
  if (in_table(sort)) return tables_.sorts[static_cast<std::size_t>(sort)].one;
  return source().one(sort);
}

Elem TableAlgebra::do_meet(int sort, Elem a, Elem b) const {
  if (in_table(sort)) {
    const auto& s = tables_.sorts[static_cast<std::size_t>(sort)];
    return s.meet[a * s.size + b];
  }
  return source().meet(sort, a, b);
}

Elem TableAlgebra::do_join(int sort, Elem a, Elem b) const {
  if (in_table(sort)) {
    const auto& s = tables_.sorts[static_cast<std::size_t>(sort)];
    return s.join[a * s.size + b];
  }
  return source().join(sort, a, b);
}

Elem TableAlgebra::do_neg(int sort, Elem a) const {
  if (in_table(sort)) return tables_.sorts[static_cast<std::size_t>(sort)].neg[a];
  return source().neg(sort, a);
}

Elem TableAlgebra::do_subst(const Substitution& alpha, Elem a) const {
  if (in_table(alpha.dom()) && in_table(alpha.cod())) return tables_.subst.at(alpha)[a];
  return out(alpha.cod(), source().subst(alpha, in(alpha.dom(), a)));
}

Elem TableAlgebra::do_exists(int n, Elem a) const {
  if (in_table(n + 1)) return tables_.exists.at(n)[a];
  return out(n, source().exists(n, in(n + 1, a)));
}

Elem TableAlgebra::do_delta(int n, int i, int j) const {
  if (in_table(n)) return tables_.delta.at({n, i, j});
  return source().delta(n, i, j);
}

// Builders --------------------------------------------------------------------

std::shared_ptr<const ConcreteAlgebra> concrete(Universe w, Fragment fragment, int max_sort,
                                                std::uint64_t element_cap) {
  return std::make_shared<const ConcreteAlgebra>(w, fragment, max_sort, element_cap);
}

std::shared_ptr<const ProductAlgebra> product(std::vector<AlgebraPtr> factors) {
  return std::make_shared<const ProductAlgebra>(std::move(factors));
}

std::shared_ptr<const GeneratedSubalgebra> generated_subalgebra(AlgebraPtr parent, std::vector<Generator> generators) {
  return std::make_shared<const GeneratedSubalgebra>(std::move(parent), std::move(generators));
}

std::shared_ptr<const TableAlgebra> tabulate(const AlgebraPtr& a, std::optional<std::uint64_t> shuffle_seed,
                                             bool attach_extension) {
  constexpr std::uint64_t kMaxTabulated = 1u << 12;
  const int N = a->max_sort();
  const auto frag = a->fragment();
  std::vector<std::vector<Elem>> to(static_cast<std::size_t>(N + 1)), from(static_cast<std::size_t>(N + 1));
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  for (int n = 0; n <= N; ++n) {
    const auto size = a->size(n);
    if (size > kMaxTabulated) {
      throw ResourceLimit("sort " + std::to_string(n) + " has " + std::to_string(size) + " elements; tables are capped at " +
                          std::to_string(kMaxTabulated));
    }
    auto& p = to[static_cast<std::size_t>(n)];
    p.resize(size);
    std::iota(p.begin(), p.end(), Elem{0});
    if (shuffle_seed) std::shuffle(p.begin(), p.end(), rng);
    auto& q = from[static_cast<std::size_t>(n)];
    q.resize(size);
    for (Elem e = 0; e < size; ++e) q[p[e]] = e;
  }

  TableAlgebra::Tables t;
  t.fragment = frag;
  t.max_sort = N;
  for (int n = 0; n <= N; ++n) {
    const auto& p = to[static_cast<std::size_t>(n)];
    const auto& q = from[static_cast<std::size_t>(n)];
    TableAlgebra::SortTable s;
    s.size = p.size();
    s.zero = q[a->zero(n)];
    s.one = q[a->one(n)];
    s.meet.resize(s.size * s.size);
    s.join.resize(s.size * s.size);
    for (Elem x = 0; x < s.size; ++x) {
      for (Elem y = 0; y < s.size; ++y) {
        s.meet[x * s.size + y] = q[a->meet(n, p[x], p[y])];
        s.join[x * s.size + y] = q[a->join(n, p[x], p[y])];
      }
    }
    if (frag.has_negation()) {
      s.neg.resize(s.size);
      for (Elem x = 0; x < s.size; ++x) s.neg[x] = q[a->neg(n, p[x])];
    }
    t.sorts.push_back(std::move(s));
  }
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k <= N; ++k) {
      const auto& p = to[static_cast<std::size_t>(n)];
      const auto& q = from[static_cast<std::size_t>(k)];
      for (const auto& alpha : all_substitutions(n, k)) {
        std::vector<Elem> row(p.size());
        for (Elem x = 0; x < p.size(); ++x) row[x] = q[a->subst(alpha, p[x])];
        t.subst.emplace(alpha, std::move(row));
      }
    }
  }
  if (frag.has_exists()) {
    for (int n = 0; n + 1 <= N; ++n) {
      const auto& p = to[static_cast<std::size_t>(n + 1)];
      const auto& q = from[static_cast<std::size_t>(n)];
      std::vector<Elem> row(p.size());
      for (Elem x = 0; x < p.size(); ++x) row[x] = q[a->exists(n, p[x])];
      t.exists.emplace(n, std::move(row));
    }
  }
  if (frag.with_equality) {
    for (int n = 0; n <= N; ++n) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) t.delta.emplace(std::tuple{n, i, j}, from[static_cast<std::size_t>(n)][a->delta(n, i, j)]);
      }
    }
  }
  std::optional<TableAlgebra::Extension> ext;
  if (attach_extension) ext = TableAlgebra::Extension{a, std::move(to), std::move(from)};
  return std::make_shared<const TableAlgebra>(std::move(t), std::move(ext));
}

}  // namespace relalg
