#pragma once

#include <iosfwd>

namespace kjdt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitInternal = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kjdt
