#include "relalg/relation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace relalg {

namespace {

constexpr std::uint64_t kMaxTupleCount = std::uint64_t{1} << 32;

std::size_t word_count(std::uint64_t bits) { return static_cast<std::size_t>((bits + 63) / 64); }

void require_same_shape(const Relation& r, const Relation& s, const char* op) {
  if (r.universe() != s.universe()) {
    throw UniverseMismatch(std::string(op) + ": universes of size " + std::to_string(r.universe().size) +
                           " and " + std::to_string(s.universe().size));
  }
  if (r.arity() != s.arity()) {
    throw ArityError(std::string(op) + ": arities " + std::to_string(r.arity()) + " and " +
                     std::to_string(s.arity()));
  }
}

}  // namespace

std::uint64_t tuple_count(Universe w, int arity) {
  if (arity < 0) throw ArityError("negative arity " + std::to_string(arity));
  std::uint64_t n = 1;
  for (int i = 0; i < arity; ++i) {
    n *= w.size;
    if (n > kMaxTupleCount) {
      throw ResourceLimit("W^" + std::to_string(arity) + " over |W|=" + std::to_string(w.size) +
                          " exceeds 2^32 tuples");
    }
  }
  return n;
}

std::uint64_t tuple_index(Universe w, std::span<const Point> tuple) {
  std::uint64_t index = 0;
  for (Point x : tuple) {
    if (x >= w.size) {
      throw ArityError("element " + std::to_string(x) + " outside universe of size " + std::to_string(w.size));
    }
    index = index * w.size + x;
  }
  return index;
}

Tuple tuple_at(Universe w, int arity, std::uint64_t index) {
  Tuple t(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = static_cast<Point>(index % w.size);
    index /= w.size;
  }
  return t;
}

Relation::Relation(Universe w, int arity)
    : universe_(w), arity_(arity), bits_(relalg::tuple_count(w, arity)), words_(word_count(bits_), 0) {}

Relation Relation::top(Universe w, int arity) {
  Relation r(w, arity);
  std::fill(r.words_.begin(), r.words_.end(), ~std::uint64_t{0});
  r.clear_padding();
  return r;
}

Relation Relation::from_tuples(Universe w, int arity, const std::vector<Tuple>& tuples) {
  Relation r(w, arity);
  for (const auto& t : tuples) r.insert(t);
  return r;
}

Relation Relation::from_word(Universe w, int arity, std::uint64_t bits) {
  Relation r(w, arity);
  if (r.bits_ > 64) throw ResourceLimit("relation has more than 64 tuples; no single-word form");
  if (!r.words_.empty()) {
    r.words_[0] = bits;
    r.clear_padding();
  }
  return r;
}

void Relation::clear_padding() {
  if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
}

std::uint64_t Relation::checked_index(std::span<const Point> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw ArityError("tuple of length " + std::to_string(tuple.size()) + " for relation of arity " +
                     std::to_string(arity_));
  }
  return tuple_index(universe_, tuple);
}

bool Relation::contains(std::span<const Point> tuple) const { return test(checked_index(tuple)); }

void Relation::set(std::uint64_t index, bool value) {
  auto& word = words_[index >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (index & 63);
  word = value ? (word | mask) : (word & ~mask);
}

bool Relation::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t Relation::count() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::vector<Tuple> Relation::tuples() const {
  std::vector<Tuple> out;
  for (std::uint64_t i = 0; i < bits_; ++i) {
    if (test(i)) out.push_back(tuple_at(universe_, arity_, i));
  }
  return out;
}

std::uint64_t Relation::to_word() const {
  if (bits_ > 64) throw ResourceLimit("relation has more than 64 tuples; no single-word form");
  return words_.empty() ? 0 : words_[0];
}

bool Relation::subset_of(const Relation& other) const {
  require_same_shape(*this, other, "subset_of");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(std::vector<int> map, int cod) : map_(std::move(map)), cod_(cod) {
  if (cod_ < 0) throw ArityError("negative codomain sort");
  for (int v : map_) {
    if (v < 1 || v > cod_) {
      throw ArityError("substitution entry " + std::to_string(v) + " outside 1.." + std::to_string(cod_));
    }
  }
}

Substitution Substitution::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + 1;
  return Substitution(std::move(m), n);
}

bool Substitution::is_identity() const {
  if (dom() != cod_) return false;
  for (int i = 0; i < dom(); ++i) {
    if (map_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

bool Substitution::is_increasing() const {
  return std::adjacent_find(map_.begin(), map_.end(), std::greater_equal<>()) == map_.end();
}

std::string Substitution::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(map_[i]);
  }
  return s + "]";
}

std::string Substitution::key() const {
  return std::to_string(dom()) + "->" + std::to_string(cod_) + ":" + to_string();
}

Substitution Substitution::parse_key(std::string_view key) {
  // dom->cod:[a,b,...]
  auto fail = [&](const char* why) -> Substitution {
    throw ParseError(std::string("bad substitution key '") + std::string(key) + "': " + why, 0);
  };
  const auto arrow = key.find("->");
  const auto colon = key.find(':');
  if (arrow == std::string_view::npos || colon == std::string_view::npos || colon < arrow) return fail("shape");
  const int dom = std::stoi(std::string(key.substr(0, arrow)));
  const int cod = std::stoi(std::string(key.substr(arrow + 2, colon - arrow - 2)));
  auto body = key.substr(colon + 1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') return fail("brackets");
  body = body.substr(1, body.size() - 2);
  std::vector<int> map;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    map.push_back(std::stoi(std::string(body.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  if (static_cast<int>(map.size()) != dom) return fail("domain does not match map length");
  return Substitution(std::move(map), cod);
}

std::vector<Substitution> all_substitutions(int dom, int cod) {
  std::vector<Substitution> out;
  if (dom > 0 && cod == 0) return out;
  std::vector<int> map(static_cast<std::size_t>(dom), 1);
  while (true) {
    out.emplace_back(map, cod);
    int i = dom - 1;
    while (i >= 0 && map[static_cast<std::size_t>(i)] == cod) map[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++map[static_cast<std::size_t>(i)];
  }
  return out;
}

Tuple tuple_apply(const Substitution& alpha, std::span<const Point> x) {
  if (static_cast<int>(x.size()) != alpha.cod()) {
    throw ArityError("tuple of length " + std::to_string(x.size()) + " for substitution into sort " +
                     std::to_string(alpha.cod()));
  }
  Tuple out(static_cast<std::size_t>(alpha.dom()));
  for (int i = 1; i <= alpha.dom(); ++i) out[static_cast<std::size_t>(i - 1)] = x[static_cast<std::size_t>(alpha(i) - 1)];
  return out;
}

Relation rel_apply(const Substitution& alpha, const Relation& r) {
  if (r.arity() != alpha.dom()) {
    throw ArityError("substitution " + alpha.key() + " applied to relation of arity " + std::to_string(r.arity()));
  }
  const Universe w = r.universe();
  Relation out(w, alpha.cod());
  const int k = alpha.cod();
  // weight[l] = sum of w^(dom-i) over positions i with alpha(i) = l+1
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(k), 0);
  std::uint64_t place = 1;
  for (int i = alpha.dom(); i >= 1; --i) {
    weight[static_cast<std::size_t>(alpha(i) - 1)] += place;
    place *= w.size;
  }
  std::vector<Point> digits(static_cast<std::size_t>(k), 0);
  std::uint64_t src = 0;
  for (std::uint64_t t = 0; t < out.tuple_count(); ++t) {
    if (r.test(src)) out.set(t);
    // odometer increment of the target tuple, tracking the source index
    for (int l = k - 1; l >= 0; --l) {
      auto& d = digits[static_cast<std::size_t>(l)];
      if (d + 1 < w.size) {
        ++d;
        src += weight[static_cast<std::size_t>(l)];
        break;
      }
      src -= weight[static_cast<std::size_t>(l)] * d;
      d = 0;
    }
  }
  return out;
}

Substitution compose(const Substitution& beta, const Substitution& alpha) {
  if (beta.dom() != alpha.cod()) {
    throw ArityError("cannot compose " + beta.key() + " after " + alpha.key());
  }
  std::vector<int> map(static_cast<std::size_t>(alpha.dom()));
  for (int i = 1; i <= alpha.dom(); ++i) map[static_cast<std::size_t>(i - 1)] = beta(alpha(i));
  return Substitution(std::move(map), beta.cod());
}

Relation meet(const Relation& r, const Relation& s) {
  require_same_shape(r, s, "meet");
  Relation out = r;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= s.words_[i];
  return out;
}

Relation join(const Relation& r, const Relation& s) {
  require_same_shape(r, s, "join");
  Relation out = r;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] |= s.words_[i];
  return out;
}

Relation complement(const Relation& r) {
  Relation out = r;
  for (auto& w : out.words_) w = ~w;
  out.clear_padding();
  return out;
}

Relation exists_last(const Relation& r) {
  if (r.arity() < 1) throw ArityError("exists_last on a relation of arity 0");
  const Universe w = r.universe();
  Relation out(w, r.arity() - 1);
  for (std::uint64_t prefix = 0; prefix < out.tuple_count(); ++prefix) {
    for (std::uint64_t y = 0; y < w.size; ++y) {
      if (r.test(prefix * w.size + y)) {
        out.set(prefix);
        break;
      }
    }
  }
  return out;
}

Relation delta(Universe w, int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) {
    throw ArityError("delta index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                     std::to_string(n));
  }
  Relation out(w, n);
  for (std::uint64_t t = 0; t < out.tuple_count(); ++t) {
    const Tuple x = tuple_at(w, n, t);
    if (x[static_cast<std::size_t>(i - 1)] == x[static_cast<std::size_t>(j - 1)]) out.set(t);
  }
  return out;
}

std::vector<Substitution> partitioning(std::span<const int> block_sizes) {
  int total = 0;
  for (int k : block_sizes) {
    if (k < 0) throw ArityError("negative block size");
    total += k;
  }
  std::vector<Substitution> out;
  int offset = 0;
  for (int k : block_sizes) {
    std::vector<int> map(static_cast<std::size_t>(k));
    for (int l = 1; l <= k; ++l) map[static_cast<std::size_t>(l - 1)] = l + offset;
    out.emplace_back(std::move(map), total);
    offset += k;
  }
  return out;
}

Substitution assoc_cylindrification(int n) {
  auto id = Substitution::identity(n);
  return Substitution(id.map(), n + 1);
}

// ---------------------------------------------------------------------------

std::string to_literal(const Relation& r) {
  std::ostringstream os;
  os << "arity=" << r.arity() << " universe=" << r.universe().size << " {";
  bool first = true;
  for (const auto& t : r.tuples()) {
    if (!first) os << ',';
    first = false;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) os << ',';
      os << t[i];
    }
    os << ')';
  }
  os << '}';
  return os.str();
}

namespace {

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "' in relation literal", pos_);
    ++pos_;
  }
  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) {
      throw ParseError("expected '" + std::string(word) + "' in relation literal", pos_);
    }
    pos_ += word.size();
  }
  std::uint64_t number() {
    skip_ws();
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    }
    if (pos_ == start) throw ParseError("expected a decimal integer in relation literal", pos_);
    return v;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Relation parse_literal(std::string_view text) {
  LiteralScanner sc(text);
  sc.expect_word("arity");
  sc.expect('=');
  const auto arity = static_cast<int>(sc.number());
  sc.expect_word("universe");
  sc.expect('=');
  const Universe w{static_cast<std::size_t>(sc.number())};
  Relation r(w, arity);
  sc.expect('{');
  if (!sc.peek('}')) {
    while (true) {
      const auto at = sc.pos();
      sc.expect('(');
      Tuple t;
      if (!sc.peek(')')) {
        while (true) {
          t.push_back(static_cast<Point>(sc.number()));
          if (!sc.peek(',')) break;
          sc.expect(',');
        }
      }
      sc.expect(')');
      if (static_cast<int>(t.size()) != arity) throw ParseError("tuple length does not match arity", at);
      for (Point x : t) {
        if (x >= w.size) throw ParseError("tuple element outside universe", at);
      }
      r.insert(t);
      if (!sc.peek(',')) break;
      sc.expect(',');
    }
  }
  sc.expect('}');
  if (!sc.at_end()) throw ParseError("trailing input after relation literal", sc.pos());
  return r;
}

}  // namespace relalg
