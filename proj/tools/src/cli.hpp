#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace entromax::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kNumericInstability = 2,
  kInteriority = 3,
};

struct RunConfig {
  int precision_bits = 256;
  double cluster_tol = 1e-9;
  double epsilon = 1e-6;
  std::uint64_t seed = 0;
  std::optional<std::string> trace_path;
};

/// Runs one command line (args[0] is the program name). JSON results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entromax::cli
