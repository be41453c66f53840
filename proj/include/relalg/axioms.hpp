#pragma once

// Bounded checking of the axiom schemas (0)-(13) on finite algebras.
//
// A schema has infinitely many instances; the checker enumerates every
// parameter choice (sorts, substitutions, partitioning shapes) within
// CheckBounds, and for each choice either all element tuples or a seeded
// uniform sample of them.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

enum class AxiomId { A0, A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11a, A11b, A11c, A12, A13 };

/// "0".."13", with "11a", "11b", "11c".
std::string to_string(AxiomId id);
AxiomId parse_axiom(std::string_view text);
const std::vector<AxiomId>& all_axioms();

/// pqf: 0-4; qf: 0-6; pe: 0-4, 7-10; fo: 0-10; +eq adds 11a-13.
bool applicable(AxiomId id, Fragment frag);
std::vector<AxiomId> applicable_axioms(Fragment frag);
/// Whether the algebra's fragment has every operation `frag` names.
bool covers(Fragment algebra, Fragment frag);

struct CheckBounds {
  int max_sort = -1;  // -1: the algebra's max sort
  int max_blocks = 3;
  int max_subst_count = 2;
  std::uint64_t exhaustive_cap = 1'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  std::size_t violation_cap = 16;
};

/// The individual equation or implication checked within one axiom.
enum class Law {
  Blocks,          // (0)
  Lattice1,        // (1) bounds, idempotence
  Lattice2,        // (1) commutativity, absorption
  Lattice3,        // (1) associativity, distributivity
  SubstConstants,  // (2)
  SubstLattice,    // (2)
  Compose,         // (3)
  Identity,        // (4)
  SubstNeg,        // (5)
  Complement,      // (6)
  ExistsZero,      // (7)
  ExistsJoin,      // (7)
  Unit,            // (8)
  Frobenius,       // (9)
  ExistsMeet,      // (10)
  DeltaRefl,       // (11a)
  DeltaSym,        // (11b)
  DeltaTrans,      // (11c)
  DeltaSubst,      // (12)
  DeltaImage,      // (13)
};

std::string to_string(Law law);

/// One fully determined instance of a schema. `sorts` and `substs` are the
/// schema parameters, `elements` the universally quantified variables:
///   Blocks      sorts k_1..k_m; elements r_1..r_m, s_1..s_m
///   Lattice*    sorts [n]; elements a[, b[, c]]
///   SubstConstants  substs [alpha]
///   SubstLattice    substs [alpha]; elements a, b
///   Compose     substs [beta, alpha]; elements a
///   Identity, Complement   sorts [n]; elements a
///   SubstNeg    substs [alpha]; elements a
///   ExistsZero  sorts [n]
///   ExistsJoin  sorts [n]; elements a, b of sort n+1
///   Unit        sorts [n]; elements a of sort n+1
///   Frobenius   sorts [n]; elements a of sort n+1, b of sort n
///   ExistsMeet  sorts [m]; substs alpha_1..alpha_l into m; elements r_i of sort dom(alpha_i)+1
///   DeltaRefl   sorts [n, i]; DeltaSym [n, i, j]; DeltaTrans [n, i, j, k]
///   DeltaSubst  substs [alpha, beta]; elements a
///   DeltaImage  substs [alpha]; sorts [i, j]
struct SchemaInstance {
  AxiomId axiom = AxiomId::A0;
  Law law = Law::Blocks;
  std::vector<int> sorts;
  std::vector<Substitution> substs;
  std::vector<Elem> elements;

  friend bool operator==(const SchemaInstance&, const SchemaInstance&) = default;
};

/// Sorts of the instance's element variables.
std::vector<int> element_sorts(const SchemaInstance& inst);

using ElementNamer = std::function<std::string(int sort, Elem e)>;

struct Evaluation {
  bool holds = true;
  /// The instance with its evaluated sides.
  std::string statement;
};

Evaluation evaluate(const FiniteAlgebra& a, const SchemaInstance& inst, const ElementNamer& names = {});
/// True iff the instance fails on `a`.
bool replay(const FiniteAlgebra& a, const SchemaInstance& inst);
/// Compact parameter rendering, e.g. "(0) blocks [1,1] elements [1,2,2,0]".
std::string to_string(const SchemaInstance& inst);

struct CheckReport {
  AxiomId axiom = AxiomId::A0;
  std::uint64_t families = 0;
  std::uint64_t instances = 0;
  std::uint64_t sampled_families = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // per sampled family
  bool truncated = false;     // stopped at the violation cap
  std::vector<SchemaInstance> violations;

  bool exhaustive() const { return sampled_families == 0; }
  bool passed() const { return violations.empty(); }
};

/// Throws FragmentError when the axiom does not apply to the algebra's fragment.
CheckReport check_axiom(const FiniteAlgebra& a, AxiomId id, const CheckBounds& bounds = {});

/// Every axiom applicable to `frag` (default: the algebra's fragment).
std::vector<CheckReport> check_fragment(const FiniteAlgebra& a, const CheckBounds& bounds = {});
std::vector<CheckReport> check_fragment(const FiniteAlgebra& a, Fragment frag, const CheckBounds& bounds = {});

bool all_passed(const std::vector<CheckReport>& reports);

// Gallery of the counterexamples ----------------------------------------------

struct GalleryResult {
  std::string name;
  AlgebraPtr algebra;
  ElementNamer names;
  /// The documented violating instance of axiom (0) and its evaluation.
  SchemaInstance instance;
  Evaluation evaluation;
  /// Whether the bounded axiom (0) check reported `instance`.
  bool instance_reported = false;
  CheckReport axiom0;
  /// The axioms the algebra is expected to pass.
  std::vector<CheckReport> expected_passes;
};

/// The product of two one-point qf algebras, truncated at sort 2.
std::shared_ptr<const ProductAlgebra> diamond_algebra();
/// The pe subalgebra generated by R, A, B in a product of two structures on {0,1,2}.
std::shared_ptr<const GeneratedSubalgebra> pe_theory_algebra();

GalleryResult gallery_diamond(const CheckBounds& bounds = {});
/// The pe subalgebra generated by R, A, B in a product of two structures on {0,1,2}.
GalleryResult gallery_pe_theory(const CheckBounds& bounds = {});

}  // namespace relalg
