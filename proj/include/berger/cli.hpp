#pragma once

#include <ostream>

namespace berger {

// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 truncation failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace berger
