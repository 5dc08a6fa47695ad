#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kradm/verifier.hpp"

namespace kradm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kCapExceeded = 3,
  kIoError = 4,
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::vector<SweepEntry> entries;
  VerifyOptions options;
};

/// Sweep file: one entry per line, "<group> [<lattice>] <mu>", e.g.
///   GL3 1,0,0
///   C2 Qv 1,2
/// plus global "key = value" lines for threads, cap and only. '#' starts a
/// comment.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

/// Checks that the group parses and mu has the right length; throws ConfigError.
void validate_entry(const SweepEntry& entry);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kradm::cli
