#include "relalg/fo_formula.hpp"

#include <cctype>
#include <functional>

namespace relalg {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

class FoParser {
 public:
  FoParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  FOFormula parse() {
    FOFormula f;
    expect('[');
    if (!accept(']')) {
      do {
        const auto at = pos_;
        auto name = ident();
        if (reserved(name)) throw ParseError("'" + name + "' cannot name a variable", at);
        for (const auto& existing : scope_) {
          if (existing == name) throw ParseError("variable '" + name + "' declared twice", at);
        }
        scope_.push_back(name);
      } while (accept(','));
      expect(']');
    }
    f.context = static_cast<int>(scope_.size());
    f.names = scope_;
    f.body = disj();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  static bool reserved(const std::string& w) { return w == "exists" || w == "true" || w == "false"; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  bool at_ident() {
    skip_ws();
    return pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  std::string ident() {
    if (!at_ident()) throw ParseError("expected an identifier", pos_);
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  int lookup(const std::string& name, std::size_t at) const {
    for (int k = static_cast<int>(scope_.size()) - 1; k >= 0; --k) {
      if (scope_[static_cast<std::size_t>(k)] == name) return k;
    }
    throw ParseError("unbound variable '" + name + "'", at);
  }

  FormulaPtr disj() {
    auto f = conj();
    while (accept('|')) {
      auto rhs = conj();
      f = make(Formula{.kind = Formula::Kind::Or, .kids = {f, rhs}});
    }
    return f;
  }

  FormulaPtr conj() {
    auto f = unary();
    while (accept('&')) {
      auto rhs = unary();
      f = make(Formula{.kind = Formula::Kind::And, .kids = {f, rhs}});
    }
    return f;
  }

  FormulaPtr unary() {
    if (accept('~') || accept('!')) {
      auto operand = unary();
      return make(Formula{.kind = Formula::Kind::Not, .kids = {operand}});
    }
    if (accept('(')) {
      auto f = disj();
      expect(')');
      return f;
    }
    const auto at = pos_;
    const auto word = ident();
    if (word == "true") return make(Formula{.kind = Formula::Kind::True});
    if (word == "false") return make(Formula{.kind = Formula::Kind::False});
    if (word == "exists") {
      const auto vat = pos_;
      const auto v = ident();
      if (reserved(v)) throw ParseError("'" + v + "' cannot name a variable", vat);
      for (int k = static_cast<int>(scope_.size()) - 1; k >= 0; --k) {
        if (scope_[static_cast<std::size_t>(k)] == v) {
          auto body = unary();
          return make(Formula{.kind = Formula::Kind::Exists, .var = k, .fresh = false, .bound = v, .kids = {body}});
        }
      }
      const int var = static_cast<int>(scope_.size());
      scope_.push_back(v);
      auto body = unary();
      scope_.pop_back();
      return make(Formula{.kind = Formula::Kind::Exists, .var = var, .fresh = true, .bound = v, .kids = {body}});
    }
    if (accept('(')) {
      const auto arity = sig_.arity(word);
      if (!arity) throw ParseError("unknown relation symbol '" + word + "'", at);
      std::vector<int> args;
      if (!accept(')')) {
        do {
          const auto vat = pos_;
          args.push_back(lookup(ident(), vat));
        } while (accept(','));
        expect(')');
      }
      if (static_cast<int>(args.size()) != *arity) {
        throw ParseError("relation '" + word + "' has arity " + std::to_string(*arity) + " but got " +
                             std::to_string(args.size()) + " arguments",
                         at);
      }
      return make(Formula{.kind = Formula::Kind::Atom, .rel = word, .args = std::move(args)});
    }
    const int i = lookup(word, at);
    expect('=');
    const auto vat = pos_;
    const int j = lookup(ident(), vat);
    return make(Formula{.kind = Formula::Kind::Eq, .i = i, .j = j});
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

std::string var_name(int pos) { return "x" + std::to_string(pos + 1); }

std::string print(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: {
      std::string s = f.rel + "(";
      for (std::size_t k = 0; k < f.args.size(); ++k) {
        if (k) s += ",";
        s += var_name(f.args[k]);
      }
      return s + ")";
    }
    case K::Eq:
      return var_name(f.i) + " = " + var_name(f.j);
    case K::True:
      return "true";
    case K::False:
      return "false";
    case K::And:
      return "(" + print(*f.kids[0]) + " & " + print(*f.kids[1]) + ")";
    case K::Or:
      return "(" + print(*f.kids[0]) + " | " + print(*f.kids[1]) + ")";
    case K::Not:
      return "~" + print(*f.kids[0]);
    case K::Exists:
      return "exists " + var_name(f.var) + " " + print(*f.kids[0]);
  }
  return {};
}

TermPtr compile_body(const Formula& f, int context) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: {
      std::vector<int> map;
      map.reserve(f.args.size());
      for (int a : f.args) map.push_back(a + 1);
      Substitution alpha(std::move(map), context);
      auto sym = Term::sym(f.rel, alpha.dom());
      if (alpha.is_identity()) return sym;
      return Term::apply(std::move(alpha), std::move(sym));
    }
    case K::Eq:
      return Term::delta(context, f.i + 1, f.j + 1);
    case K::True:
      return Term::top(context);
    case K::False:
      return Term::bot(context);
    case K::And:
      return Term::conj(compile_body(*f.kids[0], context), compile_body(*f.kids[1], context));
    case K::Or:
      return Term::disj(compile_body(*f.kids[0], context), compile_body(*f.kids[1], context));
    case K::Not:
      return Term::neg(compile_body(*f.kids[0], context));
    case K::Exists: {
      if (f.fresh) return Term::exists(compile_body(*f.kids[0], context + 1));
      // Quantify position b (1-based) in place: rotate it to the last slot,
      // project, then cylindrify back into the full context.
      const int k = context;
      const int b = f.var + 1;
      auto body = compile_body(*f.kids[0], k);
      if (b != k) {
        std::vector<int> rho(static_cast<std::size_t>(k));
        for (int l = 1; l <= k; ++l) rho[static_cast<std::size_t>(l - 1)] = l < b ? l : (l == b ? k : l - 1);
        body = Term::apply(Substitution(std::move(rho), k), std::move(body));
      }
      std::vector<int> kappa(static_cast<std::size_t>(k - 1));
      for (int l = 1; l <= k - 1; ++l) kappa[static_cast<std::size_t>(l - 1)] = l < b ? l : l + 1;
      return Term::apply(Substitution(std::move(kappa), k), Term::exists(std::move(body)));
    }
  }
  throw Error("unreachable formula kind");
}

void check_body(const Formula& f, Fragment frag) {
  using K = Formula::Kind;
  if (f.kind == K::Not && !frag.has_negation()) {
    throw FragmentError("negation is not in fragment " + frag.to_string());
  }
  if (f.kind == K::Exists && !frag.has_exists()) {
    throw FragmentError("existential quantification is not in fragment " + frag.to_string());
  }
  if (f.kind == K::Eq && !frag.with_equality) {
    throw FragmentError("equality is not in fragment " + frag.to_string());
  }
  for (const auto& k : f.kids) check_body(*k, frag);
}

bool satisfies(const Formula& f, const Structure& s, std::vector<Point>& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: {
      Tuple t;
      t.reserve(f.args.size());
      for (int a : f.args) t.push_back(env[static_cast<std::size_t>(a)]);
      return s.at(f.rel).contains(t);
    }
    case K::Eq:
      return env[static_cast<std::size_t>(f.i)] == env[static_cast<std::size_t>(f.j)];
    case K::True:
      return true;
    case K::False:
      return false;
    case K::And:
      return satisfies(*f.kids[0], s, env) && satisfies(*f.kids[1], s, env);
    case K::Or:
      return satisfies(*f.kids[0], s, env) || satisfies(*f.kids[1], s, env);
    case K::Not:
      return !satisfies(*f.kids[0], s, env);
    case K::Exists: {
      const auto n = static_cast<Point>(s.universe().size);
      bool found = false;
      if (f.fresh) {
        env.push_back(0);
        for (Point c = 0; c < n && !found; ++c) {
          env.back() = c;
          found = satisfies(*f.kids[0], s, env);
        }
        env.pop_back();
      } else {
        // Index, not reference: nested quantifiers grow env.
        const auto slot = static_cast<std::size_t>(f.var);
        const Point saved = env[slot];
        for (Point c = 0; c < n && !found; ++c) {
          env[slot] = c;
          found = satisfies(*f.kids[0], s, env);
        }
        env[slot] = saved;
      }
      return found;
    }
  }
  throw Error("unreachable formula kind");
}

}  // namespace

FOFormula parse_fo(std::string_view text, const Signature& sig) { return FoParser(text, sig).parse(); }

std::string to_string(const FOFormula& f) {
  std::string s = "[";
  for (int k = 0; k < f.context; ++k) {
    if (k) s += ",";
    s += var_name(k);
  }
  return s + "] " + print(*f.body);
}

void check_fragment(const FOFormula& f, Fragment frag) { check_body(*f.body, frag); }

TermPtr compile(const FOFormula& f) { return compile_body(*f.body, f.context); }

TermPtr compile(const FOFormula& f, Fragment frag) {
  check_fragment(f, frag);
  return compile(f);
}

Relation eval_fo_naive(const FOFormula& f, const Structure& s) {
  const Universe w = s.universe();
  Relation out(w, f.context);
  for (std::uint64_t t = 0; t < out.tuple_count(); ++t) {
    auto env = tuple_at(w, f.context, t);
    if (satisfies(*f.body, s, env)) out.set(t);
  }
  return out;
}

}  // namespace relalg
