#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detrep {

// Run one command line (argv[0] excluded). Exit code: 0 on mathematical
// success (a certified NotDecomposable verdict included), 1 on input or
// parse errors, 2 on internal assertion failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detrep
