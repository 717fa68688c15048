#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace bmn::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNonTerminating = 2;
inline constexpr int kExitCutOff = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

/// Set by the SIGINT handler; long-running commands stop early and flush.
std::atomic<bool>& interrupted();

/// Runs the CLI; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from BMN_THREADS, else the hardware thread count.
unsigned defaultWorkers();

}  // namespace bmn::app
