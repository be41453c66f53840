#include "relalg/axioms.hpp"

#include <numeric>
#include <random>

#include "relalg/lattice.hpp"

namespace relalg {

namespace {

struct AxiomName {
  AxiomId id;
  const char* text;
};

constexpr AxiomName kAxiomNames[] = {
    {AxiomId::A0, "0"},     {AxiomId::A1, "1"},     {AxiomId::A2, "2"},     {AxiomId::A3, "3"},
    {AxiomId::A4, "4"},     {AxiomId::A5, "5"},     {AxiomId::A6, "6"},     {AxiomId::A7, "7"},
    {AxiomId::A8, "8"},     {AxiomId::A9, "9"},     {AxiomId::A10, "10"},   {AxiomId::A11a, "11a"},
    {AxiomId::A11b, "11b"}, {AxiomId::A11c, "11c"}, {AxiomId::A12, "12"},   {AxiomId::A13, "13"},
};

}  // namespace

std::string to_string(AxiomId id) {
  for (const auto& n : kAxiomNames) {
    if (n.id == id) return n.text;
  }
  return "?";
}

AxiomId parse_axiom(std::string_view text) {
  for (const auto& n : kAxiomNames) {
    if (text == n.text) return n.id;
  }
  throw ParseError("unknown axiom '" + std::string(text) + "' (expected 0..13, 11a, 11b or 11c)", 0);
}

const std::vector<AxiomId>& all_axioms() {
  static const std::vector<AxiomId> ids = [] {
    std::vector<AxiomId> v;
    for (const auto& n : kAxiomNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

bool applicable(AxiomId id, Fragment frag) {
  switch (id) {
    case AxiomId::A0:
    case AxiomId::A1:
    case AxiomId::A2:
    case AxiomId::A3:
    case AxiomId::A4:
      return true;
    case AxiomId::A5:
    case AxiomId::A6:
      return frag.has_negation();
    case AxiomId::A7:
    case AxiomId::A8:
    case AxiomId::A9:
    case AxiomId::A10:
      return frag.has_exists();
    case AxiomId::A11a:
    case AxiomId::A11b:
    case AxiomId::A11c:
    case AxiomId::A12:
    case AxiomId::A13:
      return frag.with_equality;
  }
  return false;
}

std::vector<AxiomId> applicable_axioms(Fragment frag) {
  std::vector<AxiomId> out;
  for (const auto id : all_axioms()) {
    if (applicable(id, frag)) out.push_back(id);
  }
  return out;
}

bool covers(Fragment algebra, Fragment frag) {
  return (algebra.has_negation() || !frag.has_negation()) && (algebra.has_exists() || !frag.has_exists()) &&
         (algebra.with_equality || !frag.with_equality);
}

std::string to_string(Law law) {
  switch (law) {
    case Law::Blocks: return "blocks";
    case Law::Lattice1: return "lattice-1";
    case Law::Lattice2: return "lattice-2";
    case Law::Lattice3: return "lattice-3";
    case Law::SubstConstants: return "subst-constants";
    case Law::SubstLattice: return "subst-lattice";
    case Law::Compose: return "compose";
    case Law::Identity: return "identity";
    case Law::SubstNeg: return "subst-neg";
    case Law::Complement: return "complement";
    case Law::ExistsZero: return "exists-zero";
    case Law::ExistsJoin: return "exists-join";
    case Law::Unit: return "unit";
    case Law::Frobenius: return "frobenius";
    case Law::ExistsMeet: return "exists-meet";
    case Law::DeltaRefl: return "delta-refl";
    case Law::DeltaSym: return "delta-sym";
    case Law::DeltaTrans: return "delta-trans";
    case Law::DeltaSubst: return "delta-subst";
    case Law::DeltaImage: return "delta-image";
  }
  return "?";
}

std::vector<int> element_sorts(const SchemaInstance& I) {
  const auto& s = I.sorts;
  switch (I.law) {
    case Law::Blocks: {
      std::vector<int> out = s;
      out.insert(out.end(), s.begin(), s.end());
      return out;
    }
    case Law::Lattice1:
    case Law::Identity:
    case Law::Complement:
      return {s.at(0)};
    case Law::Lattice2:
      return {s.at(0), s.at(0)};
    case Law::Lattice3:
      return {s.at(0), s.at(0), s.at(0)};
    case Law::SubstLattice:
      return {I.substs.at(0).dom(), I.substs.at(0).dom()};
    case Law::Compose:
      return {I.substs.at(1).dom()};
    case Law::SubstNeg:
    case Law::DeltaSubst:
      return {I.substs.at(0).dom()};
    case Law::ExistsJoin:
      return {s.at(0) + 1, s.at(0) + 1};
    case Law::Unit:
      return {s.at(0) + 1};
    case Law::Frobenius:
      return {s.at(0) + 1, s.at(0)};
    case Law::ExistsMeet: {
      std::vector<int> out;
      const auto l = I.substs.size() / 2;
      for (std::size_t i = 0; i < l; ++i) out.push_back(I.substs[i].dom() + 1);
      return out;
    }
    case Law::SubstConstants:
    case Law::ExistsZero:
    case Law::DeltaRefl:
    case Law::DeltaSym:
    case Law::DeltaTrans:
    case Law::DeltaImage:
      return {};
  }
  return {};
}

namespace {

class Judge {
 public:
  Judge(const FiniteAlgebra& a, const SchemaInstance& inst, const ElementNamer* names, std::string* out)
      : a_(a), inst_(inst), names_(names), out_(out) {}

  std::string name(int sort, Elem e) const { return names_ && *names_ ? (*names_)(sort, e) : a_.describe(sort, e); }

  bool eq(int sort, Elem lhs, Elem rhs, const char* law) {
    if (lhs == rhs) return true;
    fail(std::string(law) + " fails: lhs = " + name(sort, lhs) + ", rhs = " + name(sort, rhs));
    return false;
  }

  bool le(int sort, Elem lhs, Elem rhs, const char* law) {
    if (a_.leq(sort, lhs, rhs)) return true;
    fail(std::string(law) + " fails: lhs = " + name(sort, lhs) + ", rhs = " + name(sort, rhs));
    return false;
  }

  void fail(std::string text) {
    if (!out_) return;
    const auto sorts = element_sorts(inst_);
    if (!sorts.empty()) {
      text += " at";
      for (std::size_t i = 0; i < sorts.size(); ++i) {
        text += (i ? ", " : " ") + std::string(1, static_cast<char>('a' + i)) + " = " +
                name(sorts[i], inst_.elements[i]);
      }
    }
    *out_ = std::move(text);
  }

 private:
  const FiniteAlgebra& a_;
  const SchemaInstance& inst_;
  const ElementNamer* names_;
  std::string* out_;
};

bool law_holds(const FiniteAlgebra& A, const SchemaInstance& I, const ElementNamer* names, std::string* out) {
  Judge j(A, I, names, out);
  const auto& e = I.elements;
  const auto& s = I.sorts;
  switch (I.law) {
    case Law::Blocks: {
      const auto m = s.size();
      const int n = std::accumulate(s.begin(), s.end(), 0);
      Elem lhs = A.zero(n), rhs = A.one(n);
      for (std::size_t i = 0; i < m; ++i) {
        lhs = A.join(n, lhs, A.subst(I.substs[i], e[m + i]));
        rhs = A.meet(n, rhs, A.subst(I.substs[i], e[i]));
      }
      if (!A.leq(n, rhs, lhs)) return true;
      for (std::size_t i = 0; i < m; ++i) {
        if (A.leq(s[i], e[i], e[m + i])) return true;
      }
      if (out) {
        if (m == 0) {
          *out = "0 >= 1 in sort 0 (the empty family)";
        } else {
          std::string join, meet, concl;
          for (std::size_t i = 0; i < m; ++i) {
            const auto c = "c" + std::to_string(i + 1);
            join += (i ? " | " : "") + c + "(" + j.name(s[i], e[m + i]) + ")";
            meet += (i ? " & " : "") + c + "(" + j.name(s[i], e[i]) + ")";
            concl += (i ? ", " : "") + j.name(s[i], e[m + i]) + " !>= " + j.name(s[i], e[i]);
          }
          *out = join + " >= " + meet + " in sort " + std::to_string(n) + ", but " + concl;
        }
      }
      return false;
    }
    case Law::Lattice1: {
      const int n = s[0];
      const Elem a = e[0], z = A.zero(n), o = A.one(n);
      return j.eq(n, A.meet(n, a, z), z, "a & 0 = 0") && j.eq(n, A.join(n, a, o), o, "a | 1 = 1") &&
             j.eq(n, A.meet(n, a, o), a, "a & 1 = a") && j.eq(n, A.join(n, a, z), a, "a | 0 = a") &&
             j.eq(n, A.meet(n, a, a), a, "a & a = a") && j.eq(n, A.join(n, a, a), a, "a | a = a");
    }
    case Law::Lattice2: {
      const int n = s[0];
      const Elem a = e[0], b = e[1];
      return j.eq(n, A.meet(n, a, b), A.meet(n, b, a), "a & b = b & a") &&
             j.eq(n, A.join(n, a, b), A.join(n, b, a), "a | b = b | a") &&
             j.eq(n, A.meet(n, a, A.join(n, a, b)), a, "a & (a | b) = a") &&
             j.eq(n, A.join(n, a, A.meet(n, a, b)), a, "a | (a & b) = a");
    }
    case Law::Lattice3: {
      const int n = s[0];
      const Elem a = e[0], b = e[1], c = e[2];
      return j.eq(n, A.meet(n, a, A.meet(n, b, c)), A.meet(n, A.meet(n, a, b), c), "a & (b & c) = (a & b) & c") &&
             j.eq(n, A.join(n, a, A.join(n, b, c)), A.join(n, A.join(n, a, b), c), "a | (b | c) = (a | b) | c") &&
             j.eq(n, A.meet(n, a, A.join(n, b, c)), A.join(n, A.meet(n, a, b), A.meet(n, a, c)),
                  "a & (b | c) = (a & b) | (a & c)") &&
             j.eq(n, A.join(n, a, A.meet(n, b, c)), A.meet(n, A.join(n, a, b), A.join(n, a, c)),
                  "a | (b & c) = (a | b) & (a | c)");
    }
    case Law::SubstConstants: {
      const auto& al = I.substs[0];
      const int k = al.cod();
      return j.eq(k, A.subst(al, A.zero(al.dom())), A.zero(k), "alpha(0) = 0") &&
             j.eq(k, A.subst(al, A.one(al.dom())), A.one(k), "alpha(1) = 1");
    }
    case Law::SubstLattice: {
      const auto& al = I.substs[0];
      const int n = al.dom(), k = al.cod();
      const Elem a = e[0], b = e[1];
      return j.eq(k, A.subst(al, A.meet(n, a, b)), A.meet(k, A.subst(al, a), A.subst(al, b)),
                  "alpha(a & b) = alpha(a) & alpha(b)") &&
             j.eq(k, A.subst(al, A.join(n, a, b)), A.join(k, A.subst(al, a), A.subst(al, b)),
                  "alpha(a | b) = alpha(a) | alpha(b)");
    }
    case Law::Compose: {
      const auto &be = I.substs[0], &al = I.substs[1], &ba = I.substs[2];
      return j.eq(be.cod(), A.subst(ba, e[0]), A.subst(be, A.subst(al, e[0])), "(beta o alpha)(a) = beta(alpha(a))");
    }
    case Law::Identity:
      return j.eq(s[0], A.subst(I.substs[0], e[0]), e[0], "id(a) = a");
    case Law::SubstNeg: {
      const auto& al = I.substs[0];
      return j.eq(al.cod(), A.subst(al, A.neg(al.dom(), e[0])), A.neg(al.cod(), A.subst(al, e[0])),
                  "alpha(~a) = ~alpha(a)");
    }
    case Law::Complement: {
      const int n = s[0];
      return j.eq(n, A.join(n, e[0], A.neg(n, e[0])), A.one(n), "a | ~a = 1") &&
             j.eq(n, A.meet(n, e[0], A.neg(n, e[0])), A.zero(n), "a & ~a = 0");
    }
    case Law::ExistsZero: {
      const int n = s[0];
      return j.eq(n, A.exists(n, A.zero(n + 1)), A.zero(n), "exists(0) = 0");
    }
    case Law::ExistsJoin: {
      const int n = s[0];
      return j.eq(n, A.exists(n, A.join(n + 1, e[0], e[1])), A.join(n, A.exists(n, e[0]), A.exists(n, e[1])),
                  "exists(a | b) = exists(a) | exists(b)");
    }
    case Law::Unit: {
      const int n = s[0];
      return j.le(n + 1, e[0], A.subst(I.substs[0], A.exists(n, e[0])), "a <= c(exists(a))");
    }
    case Law::Frobenius: {
      const int n = s[0];
      return j.eq(n, A.exists(n, A.meet(n + 1, e[0], A.subst(I.substs[0], e[1]))), A.meet(n, A.exists(n, e[0]), e[1]),
                  "exists(a & c(b)) = exists(a) & b");
    }
    case Law::ExistsMeet: {
      const int m = s[0];
      const auto l = static_cast<int>(I.substs.size() / 2);
      Elem inner = A.one(m + l), rhs = A.one(m);
      for (int i = 0; i < l; ++i) {
        const auto& al = I.substs[static_cast<std::size_t>(i)];
        const auto& be = I.substs[static_cast<std::size_t>(l + i)];
        inner = A.meet(m + l, inner, A.subst(be, e[static_cast<std::size_t>(i)]));
        rhs = A.meet(m, rhs, A.subst(al, A.exists(al.dom(), e[static_cast<std::size_t>(i)])));
      }
      for (int t = m + l - 1; t >= m; --t) inner = A.exists(t, inner);
      return j.eq(m, inner, rhs, "exists^n(meet beta_i(r_i)) = meet alpha_i(exists(r_i))");
    }
    case Law::DeltaRefl:
      return j.eq(s[0], A.delta(s[0], s[1], s[1]), A.one(s[0]), "delta_ii = 1");
    case Law::DeltaSym:
      return j.eq(s[0], A.delta(s[0], s[1], s[2]), A.delta(s[0], s[2], s[1]), "delta_ij = delta_ji");
    case Law::DeltaTrans: {
      const int n = s[0];
      return j.le(n, A.meet(n, A.delta(n, s[1], s[2]), A.delta(n, s[2], s[3])), A.delta(n, s[1], s[3]),
                  "delta_ij & delta_jk <= delta_ik");
    }
    case Law::DeltaSubst: {
      const auto &al = I.substs[0], &be = I.substs[1];
      const int k = al.dom(), n = al.cod();
      Elem d = A.one(n);
      for (int l = 1; l <= k; ++l) d = A.meet(n, d, A.delta(n, al(l), be(l)));
      return j.eq(n, A.meet(n, A.subst(al, e[0]), d), A.meet(n, A.subst(be, e[0]), d),
                  "alpha(a) & D = beta(a) & D");
    }
    case Law::DeltaImage: {
      const auto& al = I.substs[0];
      return j.eq(al.cod(), A.subst(al, A.delta(al.dom(), s[0], s[1])), A.delta(al.cod(), al(s[0]), al(s[1])),
                  "alpha(delta_ij) = delta_alpha(i)alpha(j)");
    }
  }
  return true;
}

// Compositions of n into m parts, each part >= 0.
void compositions(int n, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (m == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, m - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<SchemaInstance> families(AxiomId id, int N, const CheckBounds& b) {
  std::vector<SchemaInstance> out;
  auto add = [&](Law law, std::vector<int> sorts, std::vector<Substitution> substs = {}) {
    out.push_back(SchemaInstance{id, law, std::move(sorts), std::move(substs), {}});
  };
  auto each_subst = [&](auto&& f) {
    for (int n = 0; n <= N; ++n) {
      for (int k = 0; k <= N; ++k) {
        for (const auto& al : all_substitutions(n, k)) f(al);
      }
    }
  };
  switch (id) {
    case AxiomId::A0:
      for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= b.max_blocks; ++m) {
          std::vector<int> cur;
          std::vector<std::vector<int>> shapes;
          compositions(n, m, cur, shapes);
          for (auto& shape : shapes) {
            auto cs = partitioning(shape);
            add(Law::Blocks, std::move(shape), std::move(cs));
          }
        }
      }
      break;
    case AxiomId::A1:
      for (int n = 0; n <= N; ++n) {
        add(Law::Lattice1, {n});
        add(Law::Lattice2, {n});
        add(Law::Lattice3, {n});
      }
      break;
    case AxiomId::A2:
      each_subst([&](const Substitution& al) {
        add(Law::SubstConstants, {}, {al});
        add(Law::SubstLattice, {}, {al});
      });
      break;
    case AxiomId::A3:
      for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= N; ++k) {
          for (int m = 0; m <= N; ++m) {
            for (const auto& al : all_substitutions(n, k)) {
              for (const auto& be : all_substitutions(k, m)) add(Law::Compose, {}, {be, al, compose(be, al)});
            }
          }
        }
      }
      break;
    case AxiomId::A4:
      for (int n = 0; n <= N; ++n) add(Law::Identity, {n}, {Substitution::identity(n)});
      break;
    case AxiomId::A5:
      each_subst([&](const Substitution& al) { add(Law::SubstNeg, {}, {al}); });
      break;
    case AxiomId::A6:
      for (int n = 0; n <= N; ++n) add(Law::Complement, {n});
      break;
    case AxiomId::A7:
      for (int n = 0; n + 1 <= N; ++n) {
        add(Law::ExistsZero, {n});
        add(Law::ExistsJoin, {n});
      }
      break;
    case AxiomId::A8:
      for (int n = 0; n + 1 <= N; ++n) add(Law::Unit, {n}, {assoc_cylindrification(n)});
      break;
    case AxiomId::A9:
      for (int n = 0; n + 1 <= N; ++n) add(Law::Frobenius, {n}, {assoc_cylindrification(n)});
      break;
    case AxiomId::A10:
      for (int l = 1; l <= b.max_subst_count; ++l) {
        for (int m = 0; m + l <= N; ++m) {
          std::vector<Substitution> pool;
          for (int k = 0; k + 1 <= N; ++k) {
            for (auto& al : all_substitutions(k, m)) pool.push_back(std::move(al));
          }
          if (pool.empty()) continue;
          std::vector<std::size_t> pick(static_cast<std::size_t>(l), 0);
          while (true) {
            std::vector<Substitution> substs;
            for (const auto p : pick) substs.push_back(pool[p]);
            for (int i = 1; i <= l; ++i) {
              substs.push_back(witness_substitution(pool[pick[static_cast<std::size_t>(i - 1)]], m, l, i));
            }
            add(Law::ExistsMeet, {m}, std::move(substs));
            std::size_t d = pick.size();
            while (d > 0 && ++pick[d - 1] == pool.size()) pick[--d] = 0;
            if (d == 0) break;
          }
        }
      }
      break;
    case AxiomId::A11a:
      for (int n = 1; n <= N; ++n) {
        for (int i = 1; i <= n; ++i) add(Law::DeltaRefl, {n, i});
      }
      break;
    case AxiomId::A11b:
      for (int n = 1; n <= N; ++n) {
        for (int i = 1; i <= n; ++i) {
          for (int k = 1; k <= n; ++k) add(Law::DeltaSym, {n, i, k});
        }
      }
      break;
    case AxiomId::A11c:
      for (int n = 1; n <= N; ++n) {
        for (int i = 1; i <= n; ++i) {
          for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) add(Law::DeltaTrans, {n, i, k, l});
          }
        }
      }
      break;
    case AxiomId::A12:
      for (int k = 0; k <= N; ++k) {
        for (int n = 0; n <= N; ++n) {
          const auto subs = all_substitutions(k, n);
          for (const auto& al : subs) {
            for (const auto& be : subs) add(Law::DeltaSubst, {}, {al, be});
          }
        }
      }
      break;
    case AxiomId::A13:
      for (int k = 1; k <= N; ++k) {
        for (int n = 0; n <= N; ++n) {
          for (const auto& al : all_substitutions(k, n)) {
            for (int i = 1; i <= k; ++i) {
              for (int l = 1; l <= k; ++l) add(Law::DeltaImage, {i, l}, {al});
            }
          }
        }
      }
      break;
  }
  return out;
}

}  // namespace

Evaluation evaluate(const FiniteAlgebra& a, const SchemaInstance& inst, const ElementNamer& names) {
  const auto sorts = element_sorts(inst);
  if (sorts.size() != inst.elements.size()) throw ArityError("instance has the wrong number of elements");
  for (std::size_t i = 0; i < sorts.size(); ++i) {
    if (inst.elements[i] >= a.size(sorts[i])) throw SortError("instance element outside its sort");
  }
  Evaluation ev;
  ev.holds = law_holds(a, inst, &names, &ev.statement);
  if (ev.holds) ev.statement = "holds";
  return ev;
}

bool replay(const FiniteAlgebra& a, const SchemaInstance& inst) { return !evaluate(a, inst).holds; }

std::string to_string(const SchemaInstance& inst) {
  std::string s = "(" + to_string(inst.axiom) + ") " + to_string(inst.law);
  auto list = [](const auto& v, auto&& show) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + show(v[i]);
    return out + "]";
  };
  if (!inst.sorts.empty()) s += " sorts " + list(inst.sorts, [](int x) { return std::to_string(x); });
  if (!inst.substs.empty()) s += " substs " + list(inst.substs, [](const Substitution& x) { return x.key(); });
  if (!inst.elements.empty()) s += " elements " + list(inst.elements, [](Elem x) { return std::to_string(x); });
  return s;
}

CheckReport check_axiom(const FiniteAlgebra& a, AxiomId id, const CheckBounds& bounds) {
  if (!applicable(id, a.fragment())) {
    throw FragmentError("axiom (" + to_string(id) + ") does not apply to fragment " + a.fragment().to_string());
  }
  const int N = bounds.max_sort < 0 ? a.max_sort() : bounds.max_sort;
  CheckReport rep;
  rep.axiom = id;
  rep.seed = bounds.seed;
  std::mt19937_64 rng(bounds.seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(id) + 1)));

  auto record = [&](const SchemaInstance& inst) {
    rep.violations.push_back(inst);
    if (rep.violations.size() >= bounds.violation_cap) rep.truncated = true;
  };

  for (auto& fam : families(id, N, bounds)) {
    if (rep.truncated) break;
    ++rep.families;
    const auto sorts = element_sorts(fam);
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 1;
    bool over = false;
    for (const int s : sorts) {
      sizes.push_back(a.size(s));
      if (sizes.back() != 0 && total > bounds.exhaustive_cap / sizes.back()) over = true;
      total *= sizes.back();
    }
    if (total == 0) continue;
    fam.elements.assign(sorts.size(), 0);
    if (!over && total <= bounds.exhaustive_cap) {
      for (std::uint64_t t = 0; t < total && !rep.truncated; ++t) {
        ++rep.instances;
        if (!law_holds(a, fam, nullptr, nullptr)) record(fam);
        for (std::size_t d = fam.elements.size(); d-- > 0;) {
          if (++fam.elements[d] < sizes[d]) break;
          fam.elements[d] = 0;
        }
      }
    } else {
      ++rep.sampled_families;
      rep.samples = bounds.samples;
      for (std::uint64_t t = 0; t < bounds.samples && !rep.truncated; ++t) {
        for (std::size_t d = 0; d < sizes.size(); ++d) {
          fam.elements[d] = std::uniform_int_distribution<Elem>(0, sizes[d] - 1)(rng);
        }
        ++rep.instances;
        if (!law_holds(a, fam, nullptr, nullptr)) record(fam);
      }
    }
  }
  return rep;
}

std::vector<CheckReport> check_fragment(const FiniteAlgebra& a, const CheckBounds& bounds) {
  return check_fragment(a, a.fragment(), bounds);
}

std::vector<CheckReport> check_fragment(const FiniteAlgebra& a, Fragment frag, const CheckBounds& bounds) {
  if (!covers(a.fragment(), frag)) {
    throw FragmentError("algebra in fragment " + a.fragment().to_string() + " lacks operations of " + frag.to_string());
  }
  std::vector<CheckReport> out;
  for (const auto id : applicable_axioms(frag)) out.push_back(check_axiom(a, id, bounds));
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

}  // namespace relalg
