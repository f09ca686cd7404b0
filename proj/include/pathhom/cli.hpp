#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "pathhom/check.hpp"

namespace pathhom {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitResource = 3,
  kExitCheckFailed = 4,
  kExitConsistency = 5,
};

enum class OutputFormat { Json, Table };

struct JobSpec {
  std::filesystem::path graph;
  std::filesystem::path alpha;
  long long p = 0;
  int max_n = 6;
  std::string field = "rational";
  bool generators = false;
  bool dump_matrices = false;
  OutputFormat format = OutputFormat::Json;
  std::size_t path_cap = kDefaultPathCap;
};

/// Each command writes its report to `out`, diagnostics to `err`, and
/// returns an ExitCode. Exceptions never escape.
int cmd_homology(const JobSpec& spec, std::ostream& out, std::ostream& err);
int cmd_induced(const JobSpec& spec, const std::filesystem::path& beta, std::ostream& out,
                std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace pathhom
