#pragma once

namespace garside {

// Parses and runs one command line. Returns the process exit code: 0 for
// success, 1 for a property violation, 2 for a usage error, and 3 for a
// resource cap or reversing divergence.
int run_cli(int argc, const char* const* argv);

}  // namespace garside
