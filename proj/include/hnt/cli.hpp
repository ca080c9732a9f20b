#pragma once

namespace hnt {

// Entry point of the hnt command-line tool. Exit codes: 0 success, 1 failed
// checks, 2 usage errors, 3 exceeded budgets, 4 invalid parameters.
int run_cli(int argc, const char* const* argv);

}  // namespace hnt
