// Experiment configuration: a flat key/value config file with
// [potential] and [run] sections, merged with command-line overrides.
#pragma once

#include <cstdint>
#include <string>

#include "levydiff/potential.hpp"

namespace levydiff {

struct ExperimentConfig {
  PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);

  std::string kind = "path";  // what to run; see the CLI for the list
  double r = 10.0;            // spatial horizon / target level
  double horizon = 10.0;      // time horizon for time-indexed runs
  double step = 0.01;
  double epsilon = 1e-4;      // truncation tolerance for infinite-horizon integrals
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int workers = 1;            // <= 0: hardware count; env LEVYDIFF_WORKERS wins
  double z0 = 0.0;            // initial value for the exponential-clock process
  double level = 10.0;        // crossing level for tail probes
  std::string out;            // output path; empty = stdout
  std::string format = "csv"; // "csv" or "json"
};

// Parses `key = value` lines under [potential] / [run] headers. '#' and
// ';' start comments. Unknown keys are an error (config typos should not
// silently run the default experiment).
ExperimentConfig load_config(const std::string& path);
void apply_config_line(ExperimentConfig& cfg, const std::string& section,
                       const std::string& key, const std::string& value);

// Resolves worker count: LEVYDIFF_WORKERS env var overrides cfg.workers.
int effective_workers(const ExperimentConfig& cfg);

}  // namespace levydiff
