#pragma once

#include <ostream>

namespace exprimes::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInconclusive = 3;

/// Entry point of the exprimes tool; reports go to out (or --out), diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace exprimes::cli
