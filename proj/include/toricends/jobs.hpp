#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace toric {

enum class OutputFormat { human, structured };

struct JobOptions {
  std::size_t horizon = 64;
  OutputFormat format = OutputFormat::structured;
  std::size_t family_cap = 10000;
  std::size_t period_search = 512;
};

struct JobResult {
  int exit_code = 0;   // 0 ok, 1 validation or domain error, 2 malformed input
  std::string output;  // the document, or the error document in structured mode
  std::string error;   // "code: message" when exit_code != 0
};

const std::vector<std::string>& job_commands();

/// Runs one command on a JSON input document.
JobResult run_job(const std::string& command, const std::string& input, const JobOptions& options);

/// Runs {"jobs": [{"command": ..., "input": {...}, "horizon": n}, ...]} in
/// input order.
JobResult run_batch(const std::string& input, const JobOptions& options);

}  // namespace toric
