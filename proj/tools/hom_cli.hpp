#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitInvariant = 3;

/// Runs the `hom` command line. `args` excludes the program name. Report text goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homsim::cli
