#include "relalg/representation.hpp"

#include <map>
#include <numeric>
#include <set>

#include "relalg/axioms.hpp"

namespace relalg {

namespace {

std::uint64_t class_tuple_index(const Substitution& alpha, const std::vector<Point>& cls, std::uint64_t w) {
  std::uint64_t idx = 0;
  for (int l = 1; l <= alpha.dom(); ++l) idx = idx * w + cls[static_cast<std::size_t>(alpha(l) - 1)];
  return idx;
}

std::vector<Point> point_classes(const FiniteAlgebra& L, const PrimeFilter& f, bool with_equality) {
  const int n = f.sort;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  if (with_equality) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (f.contains(L, L.delta(n, i, j))) {
          const int a = find(i - 1), b = find(j - 1);
          if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
      }
    }
  }
  std::vector<Point> cls(static_cast<std::size_t>(n));
  std::map<int, Point> numbering;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    auto [it, fresh] = numbering.emplace(root, static_cast<Point>(numbering.size()));
    cls[static_cast<std::size_t>(i)] = it->second;
  }
  return cls;
}

void require_covers(const FiniteAlgebra& L, Fragment frag) {
  if (!covers(L.fragment(), frag)) {
    throw FragmentError("algebra in fragment " + L.fragment().to_string() + " lacks operations of " + frag.to_string());
  }
}

}  // namespace

std::string to_string(CertificateStatus s) { return s == CertificateStatus::Full ? "full" : "almost"; }

FilterModel filter_to_morphism(const FiniteAlgebra& L, const PrimeFilter& f, Fragment frag, int scope) {
  require_covers(L, frag);
  if (scope < 0) scope = L.max_sort();
  FilterModel m;
  m.filter = f;
  m.fragment = frag;
  m.scope = scope;
  m.point_class = point_classes(L, f, frag.with_equality);
  const std::uint64_t w = m.point_class.empty() ? 0 : *std::max_element(m.point_class.begin(), m.point_class.end()) + 1;
  m.universe = Universe{w};
  m.phi.universe = m.universe;

  for (int k = 0; k <= scope; ++k) {
    const auto substs = all_substitutions(k, f.sort);
    const auto size = L.size(k);
    std::vector<Relation> row;
    row.reserve(size);
    const auto tuples = tuple_count(m.universe, k);
    for (Elem r = 0; r < size; ++r) {
      Relation rel(m.universe, k);
      std::vector<std::int64_t> first(frag.with_equality ? tuples : 0, -1);
      for (std::size_t s = 0; s < substs.size(); ++s) {
        const auto idx = class_tuple_index(substs[s], m.point_class, w);
        const bool in = f.contains(L, L.subst(substs[s], r));
        if (frag.with_equality) {
          auto& seen = first[idx];
          if (seen >= 0 && rel.test(idx) != in) {
            const auto& other = substs[static_cast<std::size_t>(seen)];
            throw IllDefinedModel("phi is not well defined on element " + std::to_string(r) + " of sort " +
                                      std::to_string(k) + ": " + other.key() + " and " + substs[s].key() +
                                      " name the same tuple but disagree (axiom (12) fails)",
                                  other, substs[s]);
          }
          if (seen < 0) seen = static_cast<std::int64_t>(s);
        }
        if (in) rel.set(idx);
      }
      row.push_back(std::move(rel));
    }
    m.phi.images.push_back(std::move(row));
  }
  const auto mode = frag.has_exists() ? MorphismMode::Almost : MorphismMode::Full;
  m.check = verify_morphism(m.phi, L, frag, mode, scope);
  return m;
}

FilterModel separate(const FiniteAlgebra& L, int sort, Elem r, Elem s, Fragment frag, int scope) {
  if (r == s) throw PreconditionError("separate needs two distinct elements");
  if (scope < 0) scope = L.max_sort();
  if (sort > scope) throw PreconditionError("separate: sort lies above the scope");
  const auto f = !L.leq(sort, r, s) ? extend_to_prime(L, Filter{sort, r}, Ideal{sort, s})
                                    : extend_to_prime(L, Filter{sort, s}, Ideal{sort, r});
  auto m = filter_to_morphism(L, f, frag, scope);
  if (m.phi(sort, r) == m.phi(sort, s)) throw ConstructionFailure("separating filter did not separate");
  return m;
}

std::vector<PrimeFilter> separating_family(const FiniteAlgebra& L, int scope) {
  std::vector<PrimeFilter> family;
  auto told_apart = [&](int k, Elem a, Elem b) {
    for (const auto& f : family) {
      for (const auto& alpha : all_substitutions(k, f.sort)) {
        if (f.contains(L, L.subst(alpha, a)) != f.contains(L, L.subst(alpha, b))) return true;
      }
    }
    return false;
  };
  for (int k = scope; k >= 0; --k) {
    const auto size = L.size(k);
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = a + 1; b < size; ++b) {
        if (told_apart(k, a, b)) continue;
        family.push_back(!L.leq(k, a, b) ? extend_to_prime(L, Filter{k, a}, Ideal{k, b})
                                         : extend_to_prime(L, Filter{k, b}, Ideal{k, a}));
      }
    }
  }
  return family;
}

namespace {

std::string filter_text(const PrimeFilter& f) {
  return "up(" + std::to_string(f.generator) + ") on sort " + std::to_string(f.sort);
}

struct Master {
  std::vector<PrimeFilter> family;
  PrimeFilter master;
  FilterModel model;
  std::vector<std::string> transcript;
};

Master master_model(const FiniteAlgebra& L, Fragment frag, int scope) {
  require_covers(L, frag);
  if (scope < 0 || scope > L.max_sort()) {
    throw PreconditionError("scope must lie in 0.." + std::to_string(L.max_sort()));
  }
  Master out;
  out.family = separating_family(L, scope);
  std::string fam;
  int total = 0;
  for (const auto& f : out.family) {
    fam += (fam.empty() ? "" : ", ") + filter_text(f);
    total += f.sort;
  }
  out.transcript.push_back("separating family: " + std::to_string(out.family.size()) + " filter(s) [" + fam + "]");
  out.transcript.push_back("master sort: " + std::to_string(total));
  out.master = sum_filters(L, out.family);
  out.transcript.push_back("master filter: " + filter_text(out.master) + ", blockwise membership verified");
  out.model = filter_to_morphism(L, out.master, frag, scope);
  out.transcript.push_back("target universe size: " + std::to_string(out.model.universe.size));
  return out;
}

}  // namespace

EmbeddingCertificate embed(const FiniteAlgebra& L, Fragment frag, int scope) {
  if (frag.has_exists()) throw PreconditionError("embed handles pqf and qf fragments; use saturate for pe and fo");
  auto m = master_model(L, frag, scope);
  EmbeddingCertificate c;
  c.fragment = frag;
  c.scope = scope;
  c.family = std::move(m.family);
  c.master = m.master;
  c.morphism = m.model.check;
  c.morphic = c.morphism.ok();
  c.injective = injective(m.model.phi, scope);
  c.model = std::move(m.model);
  c.transcript = std::move(m.transcript);
  c.transcript.push_back("morphic conditions: " + std::to_string(c.morphism.conditions) + " checked, " +
                         (c.morphic ? "all hold" : "violated: " + c.morphism.violation->detail));
  c.transcript.push_back(std::string("injective on sorts 0..") + std::to_string(scope) + ": " +
                         (c.injective ? "yes" : "no"));
  if (!c.morphic || !c.injective) {
    throw ConstructionFailure("embedding failed verification: " + c.transcript.back());
  }
  c.status = CertificateStatus::Full;
  return c;
}

FilterModel injective_almost_morphism(const FiniteAlgebra& L, Fragment frag, int scope) {
  auto m = master_model(L, frag, scope);
  if (!m.model.check.ok()) {
    throw ConstructionFailure("almost morphic conditions fail: " + m.model.check.violation->detail);
  }
  if (!injective(m.model.phi, scope)) throw ConstructionFailure("master filter model is not injective");
  return std::move(m.model);
}

std::vector<Obligation> witness_obligations(const FiniteAlgebra& L, const FilterModel& stage) {
  const auto& P = stage.filter;
  const int u = P.sort;
  const auto w = stage.universe.size;
  std::vector<Obligation> out;
  for (int n = 0; n + 1 <= stage.scope; ++n) {
    std::vector<std::pair<PrimeFilter, PrimeFilter>> candidates;  // G and its pullback along c
    for (const auto& g : prime_filters(L, n + 1)) candidates.emplace_back(g, pullback_filter(L, g));
    std::set<std::uint64_t> seen;
    for (const auto& alpha : all_substitutions(n, u)) {
      if (!seen.insert(class_tuple_index(alpha, stage.point_class, w)).second) continue;
      const auto type = pullback_along(L, P, alpha);
      for (const auto& [g, base] : candidates) {
        if (!(base == type)) continue;
        bool realized = false;
        for (int b = 1; b <= u && !realized; ++b) {
          std::vector<int> map = alpha.map();
          map.push_back(b);
          realized = P.contains(L, L.subst(Substitution(std::move(map), u), g.generator));
        }
        if (!realized) out.push_back(Obligation{alpha, g});
      }
    }
  }
  return out;
}

EmbeddingCertificate saturate(const FiniteAlgebra& L, Fragment frag, const FilterModel& start, int rounds) {
  if (!frag.has_exists()) throw PreconditionError("saturate handles pe and fo fragments; use embed for pqf and qf");
  if (rounds < 0) throw PreconditionError("round budget must be nonnegative");
  if (!start.check.ok()) throw PreconditionError("start model does not satisfy the almost morphic conditions");
  const int scope = start.scope;
  EmbeddingCertificate c;
  c.fragment = frag;
  c.scope = scope;
  FilterModel stage = start;
  c.transcript.push_back("start: " + filter_text(stage.filter) + ", universe " + std::to_string(stage.universe.size));

  while (true) {
    auto obligations = witness_obligations(L, stage);
    if (obligations.empty()) {
      c.status = CertificateStatus::Full;
      break;
    }
    if (c.rounds == rounds) {
      c.status = CertificateStatus::Almost;
      c.remaining = std::move(obligations);
      c.transcript.push_back("budget exhausted with " + std::to_string(c.remaining.size()) + " obligation(s)");
      break;
    }
    std::vector<WitnessPair> pairs;
    for (const auto& o : obligations) pairs.push_back(WitnessPair{o.g, o.tuple});
    const auto h = witness_filter(L, stage.filter, pairs);
    auto next = filter_to_morphism(L, h, frag, scope);
    if (!next.check.ok()) {
      throw ConstructionFailure("stage " + std::to_string(c.rounds + 1) +
                                " fails the almost morphic conditions: " + next.check.violation->detail);
    }
    // The previous stage must survive unchanged on tuples of its own points.
    const auto u = stage.filter.sort;
    const auto w_old = stage.universe.size, w_new = next.universe.size;
    for (int k = 0; k <= scope; ++k) {
      const auto size = L.size(k);
      for (const auto& alpha : all_substitutions(k, u)) {
        const auto old_idx = class_tuple_index(alpha, stage.point_class, w_old);
        const auto new_idx = class_tuple_index(alpha, next.point_class, w_new);
        for (Elem r = 0; r < size; ++r) {
          if (stage.phi(k, r).test(old_idx) != next.phi(k, r).test(new_idx)) {
            throw ConstructionFailure("stage " + std::to_string(c.rounds + 1) + " changes element " +
                                      std::to_string(r) + " of sort " + std::to_string(k) + " on old tuples");
          }
        }
      }
    }
    ++c.rounds;
    c.transcript.push_back("round " + std::to_string(c.rounds) + ": " + std::to_string(obligations.size()) +
                           " obligation(s), " + filter_text(h) + ", universe " + std::to_string(next.universe.size) +
                           ", earlier stage preserved");
    stage = std::move(next);
  }

  c.master = stage.filter;
  c.kernel_monotone = kernel_contained(stage.phi, start.phi, scope);
  c.injective = injective(stage.phi, scope);
  c.morphism = verify_morphism(stage.phi, L, frag,
                               c.status == CertificateStatus::Full ? MorphismMode::Full : MorphismMode::Almost, scope);
  c.morphic = c.morphism.ok();
  c.transcript.push_back(std::string(c.status == CertificateStatus::Full ? "morphic" : "almost morphic") +
                         " conditions: " + std::to_string(c.morphism.conditions) + " checked, " +
                         (c.morphic ? "all hold" : "violated: " + c.morphism.violation->detail));
  c.transcript.push_back(std::string("ker(phi+) within ker(phi): ") + (c.kernel_monotone ? "yes" : "no"));
  c.transcript.push_back(std::string("injective on sorts 0..") + std::to_string(scope) + ": " +
                         (c.injective ? "yes" : "no"));
  c.model = std::move(stage);
  if (!c.morphic || !c.kernel_monotone) throw ConstructionFailure("saturated model failed verification");
  return c;
}

}  // namespace relalg
