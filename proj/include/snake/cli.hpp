#pragma once

#include <iosfwd>

namespace snake::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error, 3 identity
// verification failure.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace snake::cli
