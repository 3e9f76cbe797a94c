#pragma once

// Batch jobs: one JSON file names a command and its inputs; reports go to an
// output directory. Exit codes: 0 all verdicts non-failing, 1 input error,
// 2 hypothesis failure or numerical breakdown.

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "ultraweights/serialize.hpp"

namespace ultraweights {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitHypothesis = 2;

struct RunOptions {
  std::filesystem::path out_dir = ".";
  int threads = 1;
};

struct JobOutcome {
  int exit_code = kExitOk;
  Json report;                 // always produced, also for failures after parsing
  std::string csv;             // table form of the main result
  std::vector<std::pair<std::string, std::string>> extra_files;  // name -> contents
  std::string message;         // one line for stderr
};

/// Runs a parsed job without touching the filesystem (except "load" paths).
JobOutcome execute(const Json& job, int threads);

/// Reads, runs and writes. Malformed JSON reports line and column.
/// Returns the exit code; diagnostics go to err.
int run_job_file(const std::filesystem::path& job, const RunOptions& opt, std::ostream& err);

/// Parses text as JSON; on failure throws InputError naming line and column.
Json parse_json_text(const std::string& text, const std::string& source);

/// Runs f(0..n-1) on up to `threads` workers. Exceptions are rethrown for the
/// lowest failing index, so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

/// Quick invariant suite behind --seed-check; name and pass flag per item.
std::vector<std::pair<std::string, bool>> seed_check(int threads);

}  // namespace ultraweights
