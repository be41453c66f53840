#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "relalg/algebra.hpp"

namespace relalg {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// `spec` is a table JSON file or one of builtin:concrete:<size>,
/// builtin:diamond, builtin:pe-theory. Fragment and max sort apply to
/// builtin:concrete only.
AlgebraPtr load_algebra(const std::string& spec, Fragment fragment, int max_sort);

/// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relalg
