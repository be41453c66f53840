#pragma once

// Terms of the free algebra over a relational signature.
//
// Concrete syntax (one-based indices throughout):
//
//   term  := IDENT
//          | 'sub' '[' i1 ',' ... ',' in ']' [':' k] term
//          | 'and' '(' term ',' term ')' | 'or' '(' term ',' term ')'
//          | 'not' '(' term ')' | 'exists' '(' term ')'
//          | 'top' n | 'bot' n | 'delta' n i j
//          | '(' term ')'
//
// `sub [..]` without `:k` targets sort max(i1..in) (0 for the empty map).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/relation.hpp"

namespace relalg {

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::pair<std::string, int>> symbols);

  void add(const std::string& name, int arity);
  std::optional<int> arity(std::string_view name) const;
  const std::vector<std::pair<std::string, int>>& symbols() const { return symbols_; }

 private:
  std::vector<std::pair<std::string, int>> symbols_;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Sym, Subst, Top, Bot, Or, And, Not, Exists, Delta };

  Kind kind;
  int sort = 0;
  std::string name;          // Sym
  Substitution subst;        // Subst
  int i = 0, j = 0;          // Delta
  std::vector<TermPtr> kids;

  static TermPtr sym(std::string name, int arity);
  static TermPtr apply(Substitution alpha, TermPtr t);
  static TermPtr top(int n);
  static TermPtr bot(int n);
  static TermPtr disj(TermPtr a, TermPtr b);
  static TermPtr conj(TermPtr a, TermPtr b);
  static TermPtr neg(TermPtr a);
  static TermPtr exists(TermPtr a);
  static TermPtr delta(int n, int i, int j);
};

bool equal(const Term& a, const Term& b);
std::string to_string(const Term& t);

TermPtr parse_term(std::string_view text, const Signature& sig);

/// A structure: a universe plus one relation per signature symbol.
class Structure {
 public:
  Structure() = default;
  explicit Structure(Universe w) : universe_(w) {}

  void assign(const std::string& name, Relation r);
  const Relation& at(std::string_view name) const;
  bool has(std::string_view name) const;

  Universe universe() const { return universe_; }
  Signature signature() const;
  const std::map<std::string, Relation, std::less<>>& relations() const { return relations_; }

 private:
  Universe universe_{};
  std::map<std::string, Relation, std::less<>> relations_;
};

/// `{"universe": 2, "relations": {"R": {"arity": 2, "tuples": [[0,1]]}}}`
Structure parse_structure_json(std::string_view text);
std::string structure_to_json(const Structure& s);

/// Structural recursion through the concrete operations.
Relation eval(const Term& t, const Structure& s);

}  // namespace relalg
