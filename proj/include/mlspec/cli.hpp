#pragma once

#include <iosfwd>

namespace mlspec {

// Exit status: 0 success, 1 domain error (the error name goes to err),
// 2 malformed input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlspec
