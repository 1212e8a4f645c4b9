// Scale function, clock, exponential functional A(+infinity) and the
// moment constant K.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "levydiff/potential.hpp"
#include "levydiff/rng.hpp"

namespace levydiff {

// One truncated draw of A(+infinity) = int_0^inf e^{V_y} dy.
struct FunctionalSample {
  double value = 0.0;
  double truncation_horizon = 0.0;
  double error_bound = 0.0;  // deterministic bound on the dropped tail
};

struct KEstimate {
  double value = 0.0;
  double ci_half_width = 0.0;  // 95% normal-approximation CI
  std::size_t samples = 0;
  double winsorized = 0.0;  // 99.9%-winsorized mean, diagnostic only
};

// A(x) = int_0^x e^{V_y} dy, trapezoid on e^V with cells split exactly
// at jump records. Strictly increasing, A(0) = 0.
double scale_function(const PotentialPath& path, double x);

// a(x) = int_0^x e^{-V_s} ds.
double inverse_clock(const PotentialPath& path, double x);

// A and a at every grid point of the path.
std::vector<double> cumulative_scale(const PotentialPath& path);
std::vector<double> cumulative_clock(const PotentialPath& path);

// Simulates V cell by cell and accumulates int e^V until the
// deterministic tail bound e^{V_h} / delta_half drops below eps, with
// delta_half = |Phi'(0+)| / 2.
FunctionalSample sample_A_infinity(const PotentialSpec& spec, double eps,
                                   RngStream& rng, double step = 0.005,
                                   double horizon_cap = 1e5);

// Monte Carlo estimate of K = E[A(+infinity)^{kappa-1}].
KEstimate estimate_K(const PotentialSpec& spec, std::size_t n, double eps,
                     RngStream& rng, double step = 0.005);

// Closed form for the two worked families; absent for Mixed.
std::optional<double> exact_K(const PotentialSpec& spec);

// Constant of the tail asymptotic P{A(+inf) > x} ~ K / (Phi'(kappa) x^kappa).
double tail_constant_A(const PotentialSpec& spec, double K);

}  // namespace levydiff
