#pragma once

#include <ostream>

namespace symhecke {

// Exit codes: 0 all checks pass, 1 some check failed, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symhecke
