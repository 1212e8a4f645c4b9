#include <doctest.h>

#include <cmath>

#include "levydiff/functionals.hpp"
#include "levydiff/harness.hpp"

using namespace levydiff;

namespace {

PotentialPath flat_path(double horizon, double step, double level = 0.0) {
  PotentialPath p;
  p.step = step;
  p.horizon = horizon;
  for (double x = 0.0; x < horizon + 0.5 * step; x += step) {
    p.x.push_back(std::min(x, horizon));
    p.v.push_back(level);
    p.v_left.push_back(level);
  }
  return p;
}

}  // namespace

TEST_CASE("scale function and clock on a flat potential") {
  const PotentialPath p = flat_path(2.0, 0.1);
  CHECK(scale_function(p, 0.0) == doctest::Approx(0.0));
  CHECK(scale_function(p, 1.35) == doctest::Approx(1.35));
  CHECK(scale_function(p, 2.0) == doctest::Approx(2.0));
  CHECK(inverse_clock(p, 1.35) == doctest::Approx(1.35));

  const PotentialPath q = flat_path(1.0, 0.05, std::log(2.0));
  CHECK(scale_function(q, 1.0) == doctest::Approx(2.0));
  CHECK(inverse_clock(q, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("cumulative scale matches pointwise evaluation") {
  RngStream rng(3);
  const PotentialPath p =
      simulate_path(PotentialSpec::drift_minus_cp(1, 3, 1), 3.0, 0.05, rng);
  const auto A = cumulative_scale(p);
  const auto a = cumulative_clock(p);
  REQUIRE(A.size() == p.size());
  for (std::size_t i = 0; i < p.size(); i += 7) {
    CHECK(A[i] == doctest::Approx(scale_function(p, p.x[i])));
    CHECK(a[i] == doctest::Approx(inverse_clock(p, p.x[i])));
  }
  for (std::size_t i = 1; i < A.size(); ++i) CHECK(A[i] > A[i - 1]);
}

TEST_CASE("A(infinity) sample respects the truncation contract") {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  RngStream rng(11);
  const FunctionalSample s = sample_A_infinity(spec, 1e-4, rng);
  CHECK(s.value > 0.0);
  CHECK(s.truncation_horizon > 0.0);
  CHECK(s.error_bound <= 1e-4);

  // identical substream, identical draw
  RngStream r1 = RngStream::substream(5, 9);
  RngStream r2 = RngStream::substream(5, 9);
  CHECK(sample_A_infinity(spec, 1e-3, r1).value ==
        sample_A_infinity(spec, 1e-3, r2).value);

  // halving eps can only extend the horizon
  RngStream r3 = RngStream::substream(5, 9);
  const FunctionalSample tight = sample_A_infinity(spec, 5e-4, r3);
  CHECK(tight.error_bound <= 5e-4);
}

TEST_CASE("mean of A over a finite window") {
  // E[A(1)] = int_0^1 e^{s Phi(1)} ds = 1 - e^{-1} for Phi(1) = -1
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  const std::size_t n = 20000;
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(21, i);
    const PotentialPath p = simulate_path(spec, 1.0, 0.005, rng);
    vals[i] = scale_function(p, 1.0);
  }
  const double target = 1.0 - std::exp(-1.0);
  const MomentCheck m = moment_check(vals, target, 0.01 * target);
  CHECK(m.pass);
}

TEST_CASE("inverse-gamma identity for the exponential functional") {
  const double kappa = 3.0;
  const PotentialSpec spec = PotentialSpec::drifted_brownian(2.0 * kappa / 2.0);
  const std::size_t n = 20000;
  std::vector<double> a_vals(n), oracle(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(31, i);
    a_vals[i] = sample_A_infinity(spec, 1e-3, rng).value;
    RngStream og = RngStream::substream(32, i);
    oracle[i] = 2.0 / og.gamma(kappa);
  }
  CHECK(ks_distance(a_vals, oracle) < 0.03);
}

TEST_CASE("tail index of the exponential functional") {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(1.5);
  const std::size_t n = 30000;
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(41, i);
    vals[i] = sample_A_infinity(spec, 1e-2, rng, 0.01).value;
  }
  CHECK(hill_tail_index(vals, 0.01) == doctest::Approx(1.5).epsilon(0.10));
}

TEST_CASE("K estimate against the closed form") {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  RngStream rng(51);
  const KEstimate k = estimate_K(spec, 20000, 1e-3, rng);
  CHECK(k.samples == 20000);
  CHECK(k.value == doctest::Approx(2.0).epsilon(0.05));
  CHECK(k.ci_half_width > 0.0);
}

TEST_CASE("exact K closed forms") {
  CHECK(*exact_K(PotentialSpec::drifted_brownian(3.0)) ==
        doctest::Approx(4.0 / std::tgamma(3.0)));
  CHECK(*exact_K(PotentialSpec::drifted_brownian(1.5)) ==
        doctest::Approx(std::sqrt(2.0) / std::tgamma(1.5)));
  CHECK(*exact_K(PotentialSpec::drift_minus_cp(1, 3, 1)) ==
        doctest::Approx(2.0));
  CHECK(*exact_K(PotentialSpec::drift_minus_cp(1, 4, 1)) ==
        doctest::Approx(3.0));
  CHECK(!exact_K(PotentialSpec::mixed(1.0, -0.5, 1.0, 1.0)).has_value());
}

TEST_CASE("tail constant is positive") {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(2.0);
  CHECK(tail_constant_A(spec, *exact_K(spec)) > 0.0);
}
