#include <algorithm>

#include "relalg/axioms.hpp"

namespace relalg {

namespace {

constexpr Fragment kQf{Fragment::Base::Qf, false};
constexpr Fragment kPe{Fragment::Base::Pe, false};

std::vector<CheckReport> run(const FiniteAlgebra& a, const std::vector<AxiomId>& ids, const CheckBounds& bounds) {
  std::vector<CheckReport> out;
  for (const auto id : ids) out.push_back(check_axiom(a, id, bounds));
  return out;
}

GalleryResult finish(GalleryResult g, const CheckBounds& bounds, const std::vector<AxiomId>& passes) {
  g.evaluation = evaluate(*g.algebra, g.instance, g.names);
  auto b0 = bounds;
  // Every violation is kept so the documented one can be looked up.
  b0.violation_cap = std::max<std::size_t>(bounds.violation_cap, 1u << 16);
  g.axiom0 = check_axiom(*g.algebra, AxiomId::A0, b0);
  const auto& v = g.axiom0.violations;
  g.instance_reported = std::find(v.begin(), v.end(), g.instance) != v.end();
  g.expected_passes = run(*g.algebra, passes, bounds);
  return g;
}

}  // namespace

std::shared_ptr<const ProductAlgebra> diamond_algebra() {
  auto one_point = concrete(Universe{1}, kQf, 2);
  return product({one_point, one_point});
}

GalleryResult gallery_diamond(const CheckBounds& bounds) {
  auto p = diamond_algebra();
  GalleryResult g;
  g.name = "diamond";
  g.algebra = p;
  // Product index: component 0 is the low digit, so 1 = (1,0) and 2 = (0,1).
  g.names = [p](int sort, Elem e) -> std::string {
    if (sort == 1) {
      static const char* const kNames[] = {"0", "a", "b", "1"};
      return kNames[e];
    }
    return p->describe(sort, e);
  };
  const Elem a = 1, b = 2, zero = 0;
  const std::vector<int> blocks{1, 1};
  g.instance = SchemaInstance{AxiomId::A0, Law::Blocks, blocks, partitioning(blocks), {a, b, b, zero}};
  return finish(std::move(g), bounds,
                {AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4, AxiomId::A5, AxiomId::A6});
}

namespace {

struct PeTheory {
  std::shared_ptr<const GeneratedSubalgebra> sub;
  Elem r, a, b;
};

PeTheory build_pe_theory() {
  const Universe w{3};
  auto base = concrete(w, kPe, 2);
  auto p = product({base, base});
  const auto set = [&](std::vector<Tuple> ts) { return base->element(Relation::from_tuples(w, 1, ts)); };
  const Elem A = set({{0}, {1}});
  const Elem B = set({{1}, {2}});
  auto both = [&](Elem x, Elem y) { return p->combine(1, {x, y}); };
  const Elem R = both(A, B), AA = both(A, A), BB = both(B, B);
  auto sub = generated_subalgebra(p, {{"R", 1, R}, {"A", 1, AA}, {"B", 1, BB}});
  if (sub->size(0) != 2) throw Error("pe-theory: sort 0 of the generated algebra does not have two elements");
  return {sub, *sub->from_parent(1, R), *sub->from_parent(1, AA), *sub->from_parent(1, BB)};
}

}  // namespace

std::shared_ptr<const GeneratedSubalgebra> pe_theory_algebra() { return build_pe_theory().sub; }

GalleryResult gallery_pe_theory(const CheckBounds& bounds) {
  const auto t = build_pe_theory();
  const auto sub = t.sub;
  const Elem r = t.r, a = t.a, b = t.b;
  GalleryResult g;
  g.name = "pe-theory";
  g.algebra = sub;
  g.names = [sub, r, a, b](int sort, Elem e) -> std::string {
    if (sort == 1) {
      if (e == r) return "R";
      if (e == a) return "A";
      if (e == b) return "B";
    }
    return to_string(*sub->witness(sort, e));
  };
  const std::vector<int> blocks{1, 1};
  g.instance = SchemaInstance{AxiomId::A0, Law::Blocks, blocks, partitioning(blocks), {a, b, r, r}};
  return finish(std::move(g), bounds,
                {AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4, AxiomId::A7, AxiomId::A8, AxiomId::A9,
                 AxiomId::A10});
}

}  // namespace relalg
