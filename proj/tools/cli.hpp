#pragma once

#include <ostream>

namespace skelmc::cli {

// Exit codes: 0 success (or property holds for `check`), 1 property fails,
// 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skelmc::cli
