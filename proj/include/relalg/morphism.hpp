#pragma once

// Maps out of finite algebras and their morphic conditions.

#include <optional>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

/// An interpretation of every element of sorts 0..max_sort as a relation on
/// one universe.
struct RelationalMap {
  Universe universe;
  std::vector<std::vector<Relation>> images;  // images[sort][element]

  int max_sort() const { return static_cast<int>(images.size()) - 1; }
  const Relation& operator()(int sort, Elem e) const;
};

/// Element-to-element map between two finite algebras.
struct MorphismMap {
  std::vector<std::vector<Elem>> images;  // images[sort][element]

  int max_sort() const { return static_cast<int>(images.size()) - 1; }
  Elem operator()(int sort, Elem e) const;
};

enum class MorphismMode {
  Full,
  /// Projection is only required to satisfy exists(phi(r)) <= phi(exists(r)).
  Almost,
};

struct MorphismViolation {
  std::string condition;  // "zero", "meet", "subst", "exists", ...
  std::string detail;
};

struct MorphismCheck {
  std::uint64_t conditions = 0;
  std::optional<MorphismViolation> violation;

  bool ok() const { return !violation; }
};

/// Checks 0, 1, meet, join and every substitution between sorts 0..max_sort,
/// plus negation, projection and diagonals as far as `frag` has them. Stops at
/// the first violation.
MorphismCheck verify_morphism(const RelationalMap& phi, const FiniteAlgebra& src, Fragment frag, MorphismMode mode,
                              int max_sort);
MorphismCheck verify_morphism(const MorphismMap& f, const FiniteAlgebra& src, const FiniteAlgebra& dst, Fragment frag,
                              int max_sort);

/// phi(a) = phi(b) implies a = b on every sort 0..max_sort.
bool injective(const RelationalMap& phi, int max_sort);
/// ker(finer) is contained in ker(coarser): finer(a) = finer(b) implies coarser(a) = coarser(b).
bool kernel_contained(const RelationalMap& finer, const RelationalMap& coarser, int max_sort);

MorphismMap identity_map(const FiniteAlgebra& a, int max_sort);
/// The i-th projection out of a product.
MorphismMap projection(const ProductAlgebra& p, std::size_t i, int max_sort);

}  // namespace relalg
