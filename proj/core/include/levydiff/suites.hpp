// Named verification suites with pinned parameters and tolerances, and
// the generic experiment dispatcher behind the CLI.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levydiff/config.hpp"
#include "levydiff/harness.hpp"

namespace levydiff {

// Every suite fixes its own potential, sample counts, steps, seeds and
// tolerances; seed/workers only select the random streams and the thread
// count (results are worker-count invariant).
std::vector<std::string> suite_names();
ResultTable run_suite(const std::string& name, std::uint64_t seed,
                      int workers);

// Generic dispatcher for config-driven runs. Kinds: K-estimate,
// Z-infinity-tail, moment-check, theorem-verify, dufresne,
// cross-validate, tail-probe.
ResultTable run_experiment(const ExperimentConfig& cfg);

}  // namespace levydiff
