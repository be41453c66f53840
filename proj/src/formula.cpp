#include "relalg/formula.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace relalg {

Signature::Signature(std::vector<std::pair<std::string, int>> symbols) {
  for (auto& [name, arity] : symbols) add(name, arity);
}

void Signature::add(const std::string& name, int arity) {
  if (arity < 0) throw ArityError("symbol " + name + " has negative arity");
  if (this->arity(name)) throw Error("duplicate symbol " + name);
  symbols_.emplace_back(name, arity);
}

std::optional<int> Signature::arity(std::string_view name) const {
  for (const auto& [n, a] : symbols_) {
    if (n == name) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

void same_sort(const TermPtr& a, const TermPtr& b, const char* op) {
  if (a->sort != b->sort) {
    throw SortError(std::string(op) + " of sorts " + std::to_string(a->sort) + " and " + std::to_string(b->sort) +
                    " in " + op + "(" + to_string(*a) + ", " + to_string(*b) + ")");
  }
}

}  // namespace

TermPtr Term::sym(std::string name, int arity) {
  return make(Term{.kind = Kind::Sym, .sort = arity, .name = std::move(name)});
}

TermPtr Term::apply(Substitution alpha, TermPtr t) {
  if (t->sort != alpha.dom()) {
    throw SortError("substitution " + alpha.key() + " applied to term of sort " + std::to_string(t->sort) + ": " +
                    to_string(*t));
  }
  const int cod = alpha.cod();
  return make(Term{.kind = Kind::Subst, .sort = cod, .subst = std::move(alpha), .kids = {std::move(t)}});
}

TermPtr Term::top(int n) { return make(Term{.kind = Kind::Top, .sort = n}); }
TermPtr Term::bot(int n) { return make(Term{.kind = Kind::Bot, .sort = n}); }

TermPtr Term::disj(TermPtr a, TermPtr b) {
  same_sort(a, b, "or");
  const int s = a->sort;
  return make(Term{.kind = Kind::Or, .sort = s, .kids = {std::move(a), std::move(b)}});
}

TermPtr Term::conj(TermPtr a, TermPtr b) {
  same_sort(a, b, "and");
  const int s = a->sort;
  return make(Term{.kind = Kind::And, .sort = s, .kids = {std::move(a), std::move(b)}});
}

TermPtr Term::neg(TermPtr a) {
  const int s = a->sort;
  return make(Term{.kind = Kind::Not, .sort = s, .kids = {std::move(a)}});
}

TermPtr Term::exists(TermPtr a) {
  if (a->sort < 1) throw SortError("exists applied to a term of sort 0: " + to_string(*a));
  const int s = a->sort - 1;
  return make(Term{.kind = Kind::Exists, .sort = s, .kids = {std::move(a)}});
}

TermPtr Term::delta(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) {
    throw SortError("delta " + std::to_string(n) + " " + std::to_string(i) + " " + std::to_string(j) +
                    ": index out of range");
  }
  return make(Term{.kind = Kind::Delta, .sort = n, .i = i, .j = j});
}

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.sort != b.sort || a.name != b.name || a.i != b.i || a.j != b.j ||
      a.kids.size() != b.kids.size()) {
    return false;
  }
  if (a.kind == Term::Kind::Subst && !(a.subst == b.subst)) return false;
  for (std::size_t k = 0; k < a.kids.size(); ++k) {
    if (!equal(*a.kids[k], *b.kids[k])) return false;
  }
  return true;
}

std::string to_string(const Term& t) {
  using K = Term::Kind;
  switch (t.kind) {
    case K::Sym:
      return t.name;
    case K::Subst: {
      const auto& m = t.subst.map();
      const int natural = m.empty() ? 0 : *std::max_element(m.begin(), m.end());
      std::string s = "sub " + t.subst.to_string();
      if (natural != t.subst.cod()) s += ":" + std::to_string(t.subst.cod());
      return s + " " + to_string(*t.kids[0]);
    }
    case K::Top:
      return "top " + std::to_string(t.sort);
    case K::Bot:
      return "bot " + std::to_string(t.sort);
    case K::Or:
      return "or(" + to_string(*t.kids[0]) + ", " + to_string(*t.kids[1]) + ")";
    case K::And:
      return "and(" + to_string(*t.kids[0]) + ", " + to_string(*t.kids[1]) + ")";
    case K::Not:
      return "not(" + to_string(*t.kids[0]) + ")";
    case K::Exists:
      return "exists(" + to_string(*t.kids[0]) + ")";
    case K::Delta:
      return "delta " + std::to_string(t.sort) + " " + std::to_string(t.i) + " " + std::to_string(t.j);
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  TermPtr parse() {
    auto t = term();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return t;
  }

 private:
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

  std::string ident() {
    skip_ws();
    const auto start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) throw ParseError("expected an identifier", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    skip_ws();
    const auto start = pos_;
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (start == pos_) throw ParseError("expected a number", pos_);
    return v;
  }

  template <class F>
  TermPtr sorted(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const SortError& e) {
      throw SortError(std::string(e.what()) + " (at position " + std::to_string(at) + ")");
    }
  }

  TermPtr term() {
    skip_ws();
    const auto at = pos_;
    if (accept('(')) {
      auto t = term();
      expect(')');
      return t;
    }
    const auto word = ident();
    if (word == "sub") {
      expect('[');
      std::vector<int> map;
      if (!accept(']')) {
        do {
          map.push_back(number());
        } while (accept(','));
        expect(']');
      }
      int cod = map.empty() ? 0 : *std::max_element(map.begin(), map.end());
      if (accept(':')) cod = number();
      for (int v : map) {
        if (v < 1 || v > cod) throw ParseError("substitution entry outside 1.." + std::to_string(cod), at);
      }
      auto child = term();
      return sorted(at, [&] { return Term::apply(Substitution(std::move(map), cod), child); });
    }
    if (word == "and" || word == "or") {
      expect('(');
      auto a = term();
      expect(',');
      auto b = term();
      expect(')');
      return sorted(at, [&] { return word == "and" ? Term::conj(a, b) : Term::disj(a, b); });
    }
    if (word == "not" || word == "exists") {
      expect('(');
      auto a = term();
      expect(')');
      return sorted(at, [&] { return word == "not" ? Term::neg(a) : Term::exists(a); });
    }
    if (word == "top") return Term::top(number());
    if (word == "bot") return Term::bot(number());
    if (word == "delta") {
      const int n = number();
      const int i = number();
      const int j = number();
      return sorted(at, [&] { return Term::delta(n, i, j); });
    }
    const auto arity = sig_.arity(word);
    if (!arity) throw ParseError("unknown symbol '" + word + "'", at);
    return Term::sym(word, *arity);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text, const Signature& sig) { return TermParser(text, sig).parse(); }

// ---------------------------------------------------------------------------

void Structure::assign(const std::string& name, Relation r) {
  if (r.universe() != universe_) throw UniverseMismatch("relation for " + name + " is over a different universe");
  relations_.insert_or_assign(name, std::move(r));
}

const Relation& Structure::at(std::string_view name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw SortError("structure has no relation named '" + std::string(name) + "'");
  return it->second;
}

bool Structure::has(std::string_view name) const { return relations_.find(name) != relations_.end(); }

Signature Structure::signature() const {
  Signature sig;
  for (const auto& [name, r] : relations_) sig.add(name, r.arity());
  return sig;
}

Structure parse_structure_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("structure file: ") + e.what(), e.byte);
  }
  try {
    Structure s(Universe{j.at("universe").get<std::size_t>()});
    for (const auto& [name, spec] : j.at("relations").items()) {
      const int arity = spec.at("arity").get<int>();
      Relation r(s.universe(), arity);
      for (const auto& t : spec.at("tuples")) {
        const auto tuple = t.get<Tuple>();
        if (static_cast<int>(tuple.size()) != arity) {
          throw ArityError("relation " + name + ": tuple length does not match arity " + std::to_string(arity));
        }
        r.insert(tuple);
      }
      s.assign(name, std::move(r));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("structure file: ") + e.what(), 0);
  }
}

std::string structure_to_json(const Structure& s) {
  nlohmann::ordered_json j;
  j["universe"] = s.universe().size;
  j["relations"] = nlohmann::ordered_json::object();
  for (const auto& [name, r] : s.relations()) {
    j["relations"][name] = {{"arity", r.arity()}, {"tuples", r.tuples()}};
  }
  return j.dump();
}

// ---------------------------------------------------------------------------

Relation eval(const Term& t, const Structure& s) {
  using K = Term::Kind;
  const Universe w = s.universe();
  switch (t.kind) {
    case K::Sym: {
      const auto& r = s.at(t.name);
      if (r.arity() != t.sort) throw SortError("symbol " + t.name + " has arity " + std::to_string(r.arity()));
      return r;
    }
    case K::Subst:
      return rel_apply(t.subst, eval(*t.kids[0], s));
    case K::Top:
      return Relation::top(w, t.sort);
    case K::Bot:
      return Relation::bottom(w, t.sort);
    case K::Or:
      return join(eval(*t.kids[0], s), eval(*t.kids[1], s));
    case K::And:
      return meet(eval(*t.kids[0], s), eval(*t.kids[1], s));
    case K::Not:
      return complement(eval(*t.kids[0], s));
    case K::Exists:
      return exists_last(eval(*t.kids[0], s));
    case K::Delta:
      return delta(w, t.sort, t.i, t.j);
  }
  throw Error("unreachable term kind");
}

}  // namespace relalg
