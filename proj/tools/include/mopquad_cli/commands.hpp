#pragma once

#include <iosfwd>

namespace mopquad::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,         // bad flags, invalid parameters, I/O errors
    kExitNotConverged = 2,  // ier != 0
    kExitCheckFailed = 3,   // check threshold missed
};

// Entry point shared by main() and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mopquad::cli
