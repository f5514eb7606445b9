#ifndef BLOCKMOMENTS_CLI_HPP
#define BLOCKMOMENTS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace blockmoments::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;

/// Runs the CLI against explicit streams; `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// argv wrapper around the stream overload, writing to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace blockmoments::cli

#endif  // BLOCKMOMENTS_CLI_HPP
