// Reproducible Monte Carlo experiment engine: seeded index-partitioned
// parallel sampling with fixed-order reduction, distribution statistics
// and deterministic result tables.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "levydiff/rng.hpp"

namespace levydiff {

struct ResultRow {
  std::string name;
  double value = 0.0;
  double ci_half_width = 0.0;  // CI half-width or tolerance, 0 if n/a
  bool has_target = false;
  double target = 0.0;
  std::string provenance;  // what pins the target
  bool pass = true;
};

struct ResultTable {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double step = 0.0;
  double epsilon = 0.0;
  std::vector<ResultRow> rows;
  double wall_seconds = 0.0;  // excluded from serialized output

  bool all_pass() const;
  void add(ResultRow row) { rows.push_back(std::move(row)); }
  void add_checked(const std::string& name, double value, double target,
                   double tolerance, const std::string& provenance);
  void add_info(const std::string& name, double value);

  // Both emissions are byte-stable for a fixed config: fixed float
  // formatting (%.17g), fixed row order, no timing or worker metadata.
  std::string to_csv() const;
  std::string to_json() const;
};

void write_results(const ResultTable& table, const std::string& destination,
                   const std::string& format);  // "csv" or "json"

// Runs fn(index) for index in [0, n) across `workers` threads; results
// land in index order so the reduction is deterministic regardless of
// worker count. workers <= 0 picks the hardware count.
std::vector<double> parallel_map(std::size_t n, int workers,
                                 const std::function<double(std::size_t)>& fn);

int resolve_workers(int workers);

// Sup distance between the empirical CDF of samples and a target CDF.
// The CDF is evaluated on at most max_evals order statistics; the
// discretization slack is at most samples.size()/max_evals points of
// empirical mass.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf,
                   std::size_t max_evals = 4000);

// Two-sample sup distance.
double ks_distance(std::vector<double> a, std::vector<double> b);

// One-sided sup of F_a - F_b (positive when a is stochastically smaller).
double ks_signed_plus(std::vector<double> a, std::vector<double> b);

// Reciprocal mean log-spacing over the top-fraction order statistics.
double hill_tail_index(std::vector<double> samples, double top_fraction);

struct MomentCheck {
  double mean = 0.0;
  double ci_half_width = 0.0;
  bool pass = false;
};

// Mean with 95% CI; passes when |mean - target| <= tolerance (or the CI
// covers the target when tolerance <= 0).
MomentCheck moment_check(const std::vector<double>& samples, double target,
                         double tolerance);

double sample_mean(const std::vector<double>& v);
double sample_variance(const std::vector<double>& v);
double sample_quantile(std::vector<double> v, double q);

}  // namespace levydiff
