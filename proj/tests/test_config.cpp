#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "levydiff/config.hpp"
#include "levydiff/suites.hpp"

using namespace levydiff;

namespace {

std::string write_temp(const std::string& contents) {
  const std::string path = "test_config_tmp.cfg";
  std::ofstream f(path);
  f << contents;
  return path;
}

}  // namespace

TEST_CASE("config parsing") {
  const std::string path = write_temp(
      "# experiment fixture\n"
      "[potential]\n"
      "family = drift_cp\n"
      "c = 1\n"
      "a = 3      ; jump intensity\n"
      "b = 1\n"
      "\n"
      "[run]\n"
      "kind = K-estimate\n"
      "samples = 500\n"
      "seed = 77\n"
      "step = 0.004\n"
      "epsilon = 0.001\n"
      "format = json\n");
  const ExperimentConfig cfg = load_config(path);
  CHECK(cfg.spec.family == Family::DriftMinusCompoundPoisson);
  CHECK(cfg.spec.drift == doctest::Approx(1.0));
  CHECK(cfg.spec.jump_intensity == doctest::Approx(3.0));
  CHECK(cfg.spec.jump_rate == doctest::Approx(1.0));
  CHECK(cfg.spec.sigma == doctest::Approx(0.0));
  CHECK(cfg.kind == "K-estimate");
  CHECK(cfg.samples == 500);
  CHECK(cfg.seed == 77);
  CHECK(cfg.step == doctest::Approx(0.004));
  CHECK(cfg.format == "json");
  std::remove(path.c_str());
}

TEST_CASE("config rejects unknown keys and malformed lines") {
  ExperimentConfig cfg;
  CHECK_THROWS(apply_config_line(cfg, "run", "smaples", "100"));
  CHECK_THROWS(apply_config_line(cfg, "nosection", "x", "1"));
  CHECK_THROWS(apply_config_line(cfg, "potential", "family", "weird"));

  const std::string path = write_temp("[run]\nno equals sign here\n");
  CHECK_THROWS(load_config(path));
  std::remove(path.c_str());
  CHECK_THROWS(load_config("does_not_exist.cfg"));
}

TEST_CASE("worker resolution prefers the environment") {
  ExperimentConfig cfg;
  cfg.workers = 2;
  unsetenv("LEVYDIFF_WORKERS");
  CHECK(effective_workers(cfg) == 2);
  setenv("LEVYDIFF_WORKERS", "5", 1);
  CHECK(effective_workers(cfg) == 5);
  unsetenv("LEVYDIFF_WORKERS");
}

TEST_CASE("experiment dispatch validates input") {
  ExperimentConfig cfg;
  cfg.kind = "no-such-kind";
  CHECK_THROWS(run_experiment(cfg));
  cfg.kind = "K-estimate";
  cfg.samples = 0;
  CHECK_THROWS(run_experiment(cfg));
  cfg.samples = 10;
  cfg.step = -1.0;
  CHECK_THROWS(run_experiment(cfg));
}

TEST_CASE("small K-estimate run is deterministic") {
  ExperimentConfig cfg;
  cfg.spec = PotentialSpec::drifted_brownian(3.0);
  cfg.kind = "K-estimate";
  cfg.samples = 200;
  cfg.epsilon = 1e-2;
  cfg.step = 0.01;
  cfg.seed = 5;
  cfg.workers = 1;
  const ResultTable a = run_experiment(cfg);
  cfg.workers = 4;
  const ResultTable b = run_experiment(cfg);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.rows.size() >= 1);
}

TEST_CASE("unknown suite lists the available ones") {
  CHECK_THROWS_AS(run_suite("bogus", 1, 1), std::invalid_argument);
  CHECK(suite_names().size() == 13);
}
