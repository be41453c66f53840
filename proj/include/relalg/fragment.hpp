#pragma once

#include <string>
#include <string_view>

namespace relalg {

/// Which reduct of the full signature an algebra lives in.
struct Fragment {
  enum class Base { Pqf, Qf, Pe, Fo };

  Base base = Base::Pqf;
  bool with_equality = false;

  bool has_negation() const { return base == Base::Qf || base == Base::Fo; }
  bool has_exists() const { return base == Base::Pe || base == Base::Fo; }

  /// "pqf", "qf", "pe", "fo", optionally suffixed "+eq".
  std::string to_string() const;
  static Fragment parse(std::string_view text);

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

}  // namespace relalg
