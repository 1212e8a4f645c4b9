#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "levydiff/harness.hpp"

using namespace levydiff;

TEST_CASE("one-sample KS edge cases") {
  std::vector<double> s{0.5, 0.5, 0.5};
  // degenerate reference putting all mass below the sample
  CHECK(ks_distance(s, [](double) { return 0.0; }) == doctest::Approx(1.0));
  std::function<double(double)> half = [](double) { return 0.5; };
  CHECK_THROWS(ks_distance(std::vector<double>{}, half));
}

TEST_CASE("gaussian sample against gaussian cdf") {
  const std::size_t n = 100000;
  std::vector<double> draws(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(171, i);
    draws[i] = rng.gaussian();
  }
  auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  CHECK(ks_distance(draws, cdf) < 0.006);
}

TEST_CASE("two-sample KS") {
  std::vector<double> a{1, 2, 3, 4};
  CHECK(ks_distance(a, a) == doctest::Approx(0.0));
  std::vector<double> b{10, 11, 12};
  CHECK(ks_distance(a, b) == doctest::Approx(1.0));
  // one-sided version is signed
  CHECK(ks_signed_plus(b, a) == doctest::Approx(0.0));
  CHECK(ks_signed_plus(a, b) == doctest::Approx(1.0));
}

TEST_CASE("hill estimator on exact Pareto") {
  const std::size_t n = 100000;
  std::vector<double> draws(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(181, i);
    draws[i] = std::pow(rng.uniform(), -0.5);  // Pareto with index 2
  }
  CHECK(hill_tail_index(draws, 0.01) == doctest::Approx(2.0).epsilon(0.125));
  std::vector<double> flat(100, 1.0);
  CHECK_THROWS(hill_tail_index(flat, 0.1));
}

TEST_CASE("moment check") {
  std::vector<double> vals(10000);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    RngStream rng = RngStream::substream(191, i);
    vals[i] = rng.exponential(0.5);
  }
  CHECK(moment_check(vals, 2.0, 0.1).pass);
  CHECK(moment_check(vals, 2.0, 0.0).pass);  // CI mode
  CHECK(!moment_check(vals, 3.0, 0.1).pass);
  CHECK_THROWS(moment_check(std::vector<double>{}, 0.0, 0.1));
}

TEST_CASE("parallel map is worker-count invariant") {
  auto fn = [](std::size_t i) {
    RngStream rng = RngStream::substream(201, i);
    return rng.gaussian();
  };
  const auto one = parallel_map(1000, 1, fn);
  const auto three = parallel_map(1000, 3, fn);
  CHECK(one == three);
}

TEST_CASE("parallel map propagates exceptions") {
  std::atomic<int> calls{0};
  auto fn = [&](std::size_t i) -> double {
    ++calls;
    if (i == 57) throw std::runtime_error("boom");
    return 0.0;
  };
  CHECK_THROWS_WITH(parallel_map(100, 3, fn), "boom");
  CHECK(calls.load() > 0);
}

TEST_CASE("quantiles") {
  std::vector<double> v{4, 1, 3, 2};
  CHECK(sample_quantile(v, 0.0) == doctest::Approx(1.0));
  CHECK(sample_quantile(v, 1.0) == doctest::Approx(4.0));
  CHECK(sample_quantile(v, 0.5) == doctest::Approx(2.5));
  CHECK_THROWS(sample_quantile(std::vector<double>{}, 0.5));
}

TEST_CASE("result table serialization is byte-stable") {
  ResultTable t;
  t.kind = "demo";
  t.seed = 9;
  t.samples = 3;
  t.step = 0.1;
  t.epsilon = 1e-3;
  t.add_checked("stat", 0.1234567890123456789, 0.12, 0.01, "fixture");
  t.add_info("extra", 7.0);
  t.wall_seconds = 1.23;  // must not appear in output

  const std::string csv = t.to_csv();
  const std::string json = t.to_json();
  CHECK(csv == t.to_csv());
  CHECK(json == t.to_json());
  CHECK(csv.find("statistic,value,ci,target,provenance,pass") == 0);
  CHECK(json.find("wall") == std::string::npos);
  CHECK(t.all_pass());
  t.add_checked("bad", 1.0, 2.0, 0.1, "fixture");
  CHECK(!t.all_pass());

  const std::string f = "test_table_out.json";
  write_results(t, f, "json");
  std::ifstream in(f);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == t.to_json());
  std::remove(f.c_str());
  CHECK_THROWS(write_results(t, "x.bin", "xml"));
}
