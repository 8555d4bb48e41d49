#pragma once

#include <optional>
#include <string>

namespace c1cox {

enum class OutputFormat { Text, Json };

struct JobSpec {
  /// validate | grading | relations | factorial | tropical | ambient | resolve | duval
  std::string command;
  std::string input_path;
  OutputFormat format = OutputFormat::Text;
  bool strict_comprises = false;
  bool dot = false;
  std::string duval_type = "E6";
  int q = 4;
  std::optional<long> c;
  /// Overrides the admissible-face cap; defaults to C1COX_FACE_CAP or 20.
  std::optional<std::size_t> face_cap;
};

struct RunResult {
  /// 0 success, 1 violated requirement, 2 I/O or parse error.
  int exit_code = 0;
  std::string output;
  std::string diagnostic;
};

RunResult run(const JobSpec& job);

/// Parses the command line, runs the job, writes the report to stdout and
/// the diagnostic to stderr. Returns the exit status.
int cli_main(int argc, char** argv);

}  // namespace c1cox
