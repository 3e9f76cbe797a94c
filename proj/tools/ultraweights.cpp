#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ultraweights/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ultraweights: weight sequences, interpolation bounds and lacunary propagation"};
  std::string job;
  ultraweights::RunOptions opt;
  std::string out_dir = ".";
  bool seed = false;
  app.add_option("--job", job, "job file (JSON)");
  app.add_option("--out-dir", out_dir, "directory for reports")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  app.add_flag("--seed-check", seed, "run the built-in invariant suite");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ultraweights::kExitInput;
  }
  if (job.empty() && !seed) {
    std::cerr << "nothing to do: give --job and/or --seed-check\n";
    return ultraweights::kExitInput;
  }

  int rc = ultraweights::kExitOk;
  if (seed) {
    for (const auto& [name, ok] : ultraweights::seed_check(opt.threads)) {
      std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
      if (!ok) rc = ultraweights::kExitHypothesis;
    }
  }
  if (!job.empty()) {
    opt.out_dir = out_dir;
    const int r = ultraweights::run_job_file(job, opt, std::cerr);
    // input errors dominate
    if (r == ultraweights::kExitInput || rc == ultraweights::kExitOk) rc = r;
  }
  return rc;
}
