#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace htcover::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitContract = 3,
  kExitCapacity = 4,
  kExitIo = 5,
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Streams and environment for one invocation. Documents go to `out`,
/// diagnostics to `err` only.
struct CliContext {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::map<std::string, std::string> env;
};

/// Environment variables consulted for capacity caps.
inline const std::vector<std::string> kEnvironmentKeys = {
    "HTCOVER_MAX_VERTICES", "HTCOVER_MAX_GENERATORS", "HTCOVER_MAX_SEARCH_NODES", "HTCOVER_ORACLE_MAX_N"};

std::map<std::string, std::string> capture_environment();

/// args[0] is the program name.
int run(const std::vector<std::string>& args, CliContext& ctx);

}  // namespace htcover::cli
