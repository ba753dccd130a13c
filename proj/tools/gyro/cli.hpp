#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gyro::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kPropertyFailure = 1,
    kUsage = 2,
    kBoundary = 3,
    kSamplingHealth = 4,
};

struct Environment {
    /// Value of GYRO_SEED, if set.
    std::optional<std::string> seed;

    static Environment from_process();
};

/// Runs one command. args[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

}  // namespace gyro::cli
