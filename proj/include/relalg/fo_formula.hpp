#pragma once

// First-order formulas with an explicit variable context, and their
// compilation into signature terms.
//
// Surface syntax:
//
//   formula := '[' vars ']' body
//   body    := disj
//   disj    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := '~' unary | 'exists' VAR unary | atom | '(' body ')'
//   atom    := 'true' | 'false' | REL '(' vars ')' | VAR '=' VAR
//
// `exists v` with a fresh v appends v to the context; with v already in the
// context it quantifies that variable in place.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/fragment.hpp"
#include "relalg/formula.hpp"

namespace relalg {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Atom, Eq, True, False, And, Or, Not, Exists };

  Kind kind;
  std::string rel;            // Atom
  std::vector<int> args;      // Atom: 0-based context positions
  int i = 0, j = 0;           // Eq: 0-based positions
  int var = 0;                // Exists: 0-based position of the bound variable
  bool fresh = true;          // Exists: bound variable appended (true) or already in context
  std::string bound;          // Exists: surface name of the bound variable
  std::vector<FormulaPtr> kids;
};

struct FOFormula {
  int context = 0;
  std::vector<std::string> names;  // declared context variables
  FormulaPtr body;
};

FOFormula parse_fo(std::string_view text, const Signature& sig);
std::string to_string(const FOFormula& f);

/// Throws FragmentError if the formula uses a connective outside `frag`.
void check_fragment(const FOFormula& f, Fragment frag);

/// Compile to a term of sort f.context.
TermPtr compile(const FOFormula& f);
TermPtr compile(const FOFormula& f, Fragment frag);

/// Direct satisfaction semantics; the independent oracle for compile + eval.
Relation eval_fo_naive(const FOFormula& f, const Structure& s);

}  // namespace relalg
