#pragma once

#include <ostream>

namespace likepowers::cli {

/// Exit codes: 0 all checks pass, 1 mathematical deviation or non-integral
/// series, 2 usage or parse error.
inline constexpr int kOk = 0;
inline constexpr int kDeviation = 1;
inline constexpr int kUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace likepowers::cli
