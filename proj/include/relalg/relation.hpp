#pragma once

// Exact finite relations and the concrete meaning of every operation symbol.
//
// A relation of arity n over a universe of size w is a bitset with w^n bits.
// Tuple (x_1, ..., x_n) lives at bit  sum_i x_i * w^(n-i)  (big-endian). The
// arity-0 case has exactly one bit, for the empty tuple.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relalg/errors.hpp"

namespace relalg {

using Point = std::uint32_t;
using Tuple = std::vector<Point>;

struct Universe {
  std::size_t size = 0;

  friend bool operator==(Universe, Universe) = default;
};

/// Number of tuples in W^arity. Throws ResourceLimit beyond 2^32 tuples.
std::uint64_t tuple_count(Universe w, int arity);

std::uint64_t tuple_index(Universe w, std::span<const Point> tuple);
Tuple tuple_at(Universe w, int arity, std::uint64_t index);

class Relation {
 public:
  Relation() = default;
  Relation(Universe w, int arity);

  static Relation bottom(Universe w, int arity) { return Relation(w, arity); }
  static Relation top(Universe w, int arity);
  static Relation from_tuples(Universe w, int arity, const std::vector<Tuple>& tuples);
  /// Only valid when tuple_count(w, arity) <= 64; bit i of `bits` is tuple i.
  static Relation from_word(Universe w, int arity, std::uint64_t bits);

  Universe universe() const { return universe_; }
  int arity() const { return arity_; }
  std::uint64_t tuple_count() const { return bits_; }

  bool test(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  bool contains(std::span<const Point> tuple) const;
  void set(std::uint64_t index, bool value = true);
  void insert(std::span<const Point> tuple) { set(checked_index(tuple)); }

  bool empty() const;
  std::uint64_t count() const;
  std::vector<Tuple> tuples() const;
  std::uint64_t to_word() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool subset_of(const Relation& other) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.universe_ == b.universe_ && a.arity_ == b.arity_ && a.words_ == b.words_;
  }

 private:
  friend Relation meet(const Relation&, const Relation&);
  friend Relation join(const Relation&, const Relation&);
  friend Relation complement(const Relation&);

  std::uint64_t checked_index(std::span<const Point> tuple) const;
  void clear_padding();

  Universe universe_{};
  int arity_ = 0;
  std::uint64_t bits_ = 1;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

/// A function {1..dom} -> {1..cod}, stored 1-based as written.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::vector<int> map, int cod);

  static Substitution identity(int n);

  int dom() const { return static_cast<int>(map_.size()); }
  int cod() const { return cod_; }
  /// 1-based lookup: alpha(i).
  int operator()(int i) const { return map_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& map() const { return map_; }

  bool is_identity() const;
  bool is_increasing() const;

  /// "[2,1]"
  std::string to_string() const;
  /// "2->2:[2,1]", the table-file key.
  std::string key() const;
  static Substitution parse_key(std::string_view key);

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend auto operator<=>(const Substitution& a, const Substitution& b) {
    if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
    return a.map_ <=> b.map_;
  }

 private:
  std::vector<int> map_;
  int cod_ = 0;
};

/// Every substitution dom -> cod in lexicographic order of the map.
std::vector<Substitution> all_substitutions(int dom, int cod);

Tuple tuple_apply(const Substitution& alpha, std::span<const Point> x);
/// Inverse image: x in result iff tuple_apply(alpha, x) in r.
Relation rel_apply(const Substitution& alpha, const Relation& r);
/// beta o alpha as index functions: result(i) = beta(alpha(i)).
Substitution compose(const Substitution& beta, const Substitution& alpha);

Relation meet(const Relation& r, const Relation& s);
Relation join(const Relation& r, const Relation& s);
Relation complement(const Relation& r);

/// Projection of the last coordinate.
Relation exists_last(const Relation& r);
/// Coordinates i and j agree (1-based).
Relation delta(Universe w, int n, int i, int j);

/// Block inclusions c_i : k_i -> k_1 + ... + k_m.
std::vector<Substitution> partitioning(std::span<const int> block_sizes);
/// c : n -> n+1 with c(i) = i.
Substitution assoc_cylindrification(int n);

/// `arity=2 universe=3 {(0,1),(2,0)}`
std::string to_literal(const Relation& r);
Relation parse_literal(std::string_view text);

}  // namespace relalg
