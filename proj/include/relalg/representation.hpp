#pragma once

// Representations of finite algebras as algebras of relations, built from
// prime filters.
//
// A prime filter F on sort n gives points F_1..F_n and the interpretation
//   alpha-tuple(F_1..F_n) in phi(r)  iff  alpha(r) in F
// for every substitution alpha into sort n. With equality, points i and j are
// identified when delta_ij is in F.

#include <string>
#include <vector>

#include "relalg/lattice.hpp"
#include "relalg/morphism.hpp"

namespace relalg {

struct FilterModel {
  PrimeFilter filter;
  Fragment fragment;
  int scope = 0;                    // phi covers sorts 0..scope
  Universe universe;                // number of point classes
  std::vector<Point> point_class;  // point i (0-based) -> universe element
  RelationalMap phi;
  /// Full conditions without projection; projection as a containment only.
  MorphismCheck check;
};

/// Two substitutions that send r to different filter memberships although
/// they name the same tuple of point classes.
class IllDefinedModel : public Error {
 public:
  IllDefinedModel(const std::string& what, Substitution alpha, Substitution beta)
      : Error(what), alpha_(std::move(alpha)), beta_(std::move(beta)) {}
  const Substitution& alpha() const { return alpha_; }
  const Substitution& beta() const { return beta_; }

 private:
  Substitution alpha_, beta_;
};

/// scope < 0 means the algebra's max sort.
FilterModel filter_to_morphism(const FiniteAlgebra& L, const PrimeFilter& f, Fragment frag, int scope = -1);

/// A model whose phi tells r and s apart. The filter is the least prime filter
/// above r and off s when r is not below s, else the one above s and off r.
FilterModel separate(const FiniteAlgebra& L, int sort, Elem r, Elem s, Fragment frag, int scope = -1);

/// A tuple of points, given as alpha : n -> u, and a prime filter on sort
/// n+1 extending its type that no point weakly realizes.
struct Obligation {
  Substitution tuple;
  PrimeFilter g;
};

enum class CertificateStatus { Full, Almost };

struct EmbeddingCertificate {
  CertificateStatus status = CertificateStatus::Full;
  Fragment fragment;
  int scope = 0;
  std::vector<PrimeFilter> family;  // separating filters combined into the master
  PrimeFilter master;               // filter of the final model
  FilterModel model;
  MorphismCheck morphism;           // in Full mode
  bool morphic = false;
  bool injective = false;
  bool kernel_monotone = true;      // saturation only
  int rounds = 0;
  std::vector<Obligation> remaining;
  std::vector<std::string> transcript;
};

std::string to_string(CertificateStatus s);

/// For each pair of distinct elements in sorts 0..scope, one separating prime
/// filter (pairs already told apart by a chosen filter are skipped; sorts are
/// visited from the top down).
std::vector<PrimeFilter> separating_family(const FiniteAlgebra& L, int scope);

/// Injective morphism into a concrete algebra for pqf/qf fragments (with or
/// without equality). Throws AxiomZeroObstruction, InsufficientSorts, or
/// PreconditionError for fragments with projection.
EmbeddingCertificate embed(const FiniteAlgebra& L, Fragment frag, int scope);

/// The same construction for pe/fo fragments, checked as an injective almost
/// morphism.
FilterModel injective_almost_morphism(const FiniteAlgebra& L, Fragment frag, int scope);

/// Unrealized witness obligations of a stage model.
std::vector<Obligation> witness_obligations(const FiniteAlgebra& L, const FilterModel& stage);

/// Adds witnesses in rounds until none are missing (status Full, checked as a
/// morphism) or `rounds` batches have been spent (status Almost).
EmbeddingCertificate saturate(const FiniteAlgebra& L, Fragment frag, const FilterModel& start, int rounds);

}  // namespace relalg
