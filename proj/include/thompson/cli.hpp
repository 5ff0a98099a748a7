#pragma once

#include <iosfwd>

namespace thompson::cli {

// Exit codes: 0 success, 1 domain or usage error, 2 failed verification.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thompson::cli
