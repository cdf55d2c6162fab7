#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace explicit_lab::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,      // a verification did not hold
    kExitUsage = 2,     // bad flags, malformed input, out-of-domain arguments
    kExitResource = 3,  // coverage, range, capacity, accuracy or I/O failure
};

struct RunConfig {
    std::string command;
    long long sieve_limit = 1'000'000;
    std::string zeros_path;
    std::string testfn_spec;  // canonical form after parsing
    double tolerance = 0.0;
    std::string output_format = "json";
    std::string output_path;  // empty: standard output
    bool meta = true;
};

// Runs one subcommand. `args` excludes the program name. Reports go to the
// --output file or `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace explicit_lab::cli
