#include <doctest.h>

#include <cmath>

#include "levydiff/functionals.hpp"
#include "levydiff/gou.hpp"
#include "levydiff/harness.hpp"

using namespace levydiff;

namespace {

// Independent oracle for E_0[Z_t^2]: integrating the exponential moments
// of V over the two time orderings,
//   E_0[Z_t^2] = 16 int_0^t ds2 int_0^{s2} ds1
//                e^{(s2-s1) Phi(1)} e^{(t-s2) Phi(2)},
// evaluated with a composite Simpson rule.
double second_moment_oracle(const PotentialSpec& spec, double t, int cells) {
  const double phi1 = laplace_exponent(spec, 1.0);
  const double phi2 = laplace_exponent(spec, 2.0);
  auto inner = [&](double s2) {
    // int_0^{s2} e^{(s2-s1) phi1} ds1
    const int m = cells;
    const double h = s2 / m;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      const double a = i * h, b = a + h, mid = a + 0.5 * h;
      acc += h / 6.0 *
             (std::exp((s2 - a) * phi1) + 4.0 * std::exp((s2 - mid) * phi1) +
              std::exp((s2 - b) * phi1));
    }
    return acc;
  };
  const int m = cells;
  const double h = t / m;
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double a = i * h, b = a + h, mid = a + 0.5 * h;
    auto f = [&](double s2) {
      return std::exp((t - s2) * phi2) * inner(s2);
    };
    acc += h / 6.0 * (f(a) + 4.0 * f(mid) + f(b));
  }
  return 16.0 * acc;
}

}  // namespace

TEST_CASE("squared Bessel step from zero is exponential") {
  // dimension 2 from u = 0 over dt: Exp with mean 2 dt
  const std::size_t n = 20000;
  std::vector<double> draws(n), oracle(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(61, i);
    draws[i] = besq2_step(0.0, 1.0, rng);
    RngStream og = RngStream::substream(62, i);
    oracle[i] = og.exponential(0.5);
  }
  CHECK(ks_distance(draws, oracle) < 0.02);
}

TEST_CASE("squared Bessel step mean identity") {
  // E[U(t+dt) | U(t) = u] = u + 2 dt
  const std::size_t n = 50000;
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(63, i);
    vals[i] = besq2_step(3.0, 0.7, rng);
  }
  CHECK(moment_check(vals, 3.0 + 1.4, 0.0).pass);
}

TEST_CASE("exact moment formulas") {
  const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
  CHECK(mean_Z(b3, 1.0, 1.0) == doctest::Approx(2.0 - std::exp(-1.0)));
  CHECK(mean_Z(b3, 2.0, 100.0) == doctest::Approx(2.0));
  CHECK(second_moment_Z0(b3, 1.0) ==
        doctest::Approx(16.0 - 32.0 * std::exp(-1.0)));
  CHECK_THROWS(mean_Z(PotentialSpec::drifted_brownian(0.5), 1.0, 1.0));
  CHECK_THROWS(second_moment_Z0(PotentialSpec::drifted_brownian(1.5), 1.0));
}

TEST_CASE("second moment matches the double-integral oracle") {
  // equal-exponent branch
  const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
  CHECK(second_moment_Z0(b3, 1.0) ==
        doctest::Approx(second_moment_oracle(b3, 1.0, 200)).epsilon(1e-7));
  // distinct-exponent branch
  const PotentialSpec cp = PotentialSpec::drift_minus_cp(1, 4, 1);
  CHECK(second_moment_Z0(cp, 1.0) ==
        doctest::Approx(second_moment_oracle(cp, 1.0, 200)).epsilon(1e-7));
  CHECK(second_moment_Z0(cp, 2.5) ==
        doctest::Approx(second_moment_oracle(cp, 2.5, 200)).epsilon(1e-7));
}

TEST_CASE("simulated Z matches the mean formula") {
  const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
  const std::size_t n = 20000;
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(71, i);
    const ZPath zp = simulate_Z(b3, 0.5, 1.0, 0.005, rng);
    vals[i] = zp.z.back();
  }
  const double target = mean_Z(b3, 0.5, 1.0);
  CHECK(moment_check(vals, target, 0.02 * target).pass);
}

TEST_CASE("Z path bookkeeping") {
  RngStream rng(81);
  const ZPath zp = simulate_Z(PotentialSpec::drift_minus_cp(1, 3, 1), 1.0,
                              2.0, 0.01, rng);
  REQUIRE(zp.t.size() == zp.z.size());
  CHECK(zp.t.front() == doctest::Approx(0.0));
  CHECK(zp.z.front() == doctest::Approx(1.0));
  CHECK(zp.clock.front() == doctest::Approx(0.0));
  for (std::size_t i = 1; i < zp.t.size(); ++i) {
    CHECK(zp.clock[i] >= zp.clock[i - 1]);
    CHECK(zp.z[i] >= 0.0);
    // z and its left limit agree off jumps, differ by the jump factor on
    CHECK(zp.z[i] == doctest::Approx(std::exp(zp.v[i]) * zp.u[i]));
  }
}

TEST_CASE("larger start dominates in mean") {
  const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
  const std::size_t n = 5000;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    RngStream r1 = RngStream::substream(91, i);
    lo += simulate_Z(b3, 0.0, 0.5, 0.01, r1).z.back();
    RngStream r2 = RngStream::substream(91, i);
    hi += simulate_Z(b3, 2.0, 0.5, 0.01, r2).z.back();
  }
  CHECK(hi > lo);
}

TEST_CASE("stationary law") {
  const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
  const std::size_t n = 20000;
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(101, i);
    z[i] = sample_Z_infinity(b3, 1e-3, rng);
  }
  CHECK(moment_check(z, 2.0, 0.06).pass);
  // P{Z_inf > 4} = (1 + 4/4)^{-kappa} = 1/8 for this family
  double p = 0.0;
  for (double v : z)
    if (v > 4.0) p += 1.0;
  p /= double(n);
  CHECK(p == doctest::Approx(0.125).epsilon(0.08));
}

TEST_CASE("stationary tail constant closed form") {
  // For the drifted Brownian family the constant collapses to 4^kappa.
  for (double kappa : {1.5, 3.0}) {
    const PotentialSpec spec = PotentialSpec::drifted_brownian(kappa);
    CHECK(stationary_tail_constant(spec, *exact_K(spec)) ==
          doctest::Approx(std::pow(4.0, kappa)).epsilon(1e-9));
  }
}
