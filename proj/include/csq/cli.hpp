#pragma once

#include <ostream>

namespace csq {

// Runs the command line. Exit codes: 0 success, 1 domain error, 2 parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csq
