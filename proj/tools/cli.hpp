#pragma once

#include <iosfwd>

namespace superjac::cli {

// Exit codes: 0 success, 1 oracle mismatch, 2 invalid input, 3 budget exceeded,
// 4 partial or bounds-only result.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace superjac::cli
