// Spectrally negative Levy potential families: Laplace exponent, Cramer
// root, assumption checks and exact-in-distribution path simulation.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "levydiff/rng.hpp"

namespace levydiff {

enum class Family { DriftedBrownian, DriftMinusCompoundPoisson, Mixed };

// V_x = sigma * B_x + drift * x - (compound Poisson subordinator with
// intensity jump_intensity and Exp(jump_rate) jump sizes).
// All jumps are negative, so the Laplace exponent is finite on [0, inf).
struct PotentialSpec {
  Family family = Family::DriftedBrownian;
  double sigma = 1.0;
  double drift = 0.0;
  double jump_intensity = 0.0;  // a
  double jump_rate = 1.0;       // b

  // V_x = B_x - (delta/2) x
  static PotentialSpec drifted_brownian(double delta);
  // V_x = c x - tau_x, nu[x, inf) = a e^{-b x}
  static PotentialSpec drift_minus_cp(double c, double a, double b);
  static PotentialSpec mixed(double sigma, double d, double a, double b);

  bool has_jumps() const { return jump_intensity > 0.0; }
};

struct JumpRecord {
  double location;
  double size;  // strictly negative
};

// Cadlag discretized path of V on [0, horizon]. Jump times are inserted
// as extra grid points; v holds the right-continuous value, v_left the
// left limit (they differ only at jump records).
struct PotentialPath {
  double step = 0.0;
  double horizon = 0.0;
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> v_left;
  std::vector<JumpRecord> jumps;

  std::size_t size() const { return x.size(); }
};

// Phi(lambda) = log E[e^{lambda V_1}], closed form, lambda >= 0.
double laplace_exponent(const PotentialSpec& spec, double lambda);

double phi_prime(const PotentialSpec& spec, double lambda);

struct ValidationReport {
  double mean_v1 = 0.0;  // Phi'(0+) = E[V_1]
  bool drifts_to_minus_infinity = false;
  bool not_subordinator_opposite = false;
  bool left_side_integral_diverges = false;  // fixed driftless-BM left side
  bool parameters_valid = false;

  bool ok() const {
    return parameters_valid && drifts_to_minus_infinity &&
           not_subordinator_opposite && left_side_integral_diverges;
  }
  std::string describe() const;
};

ValidationReport validate_assumptions(const PotentialSpec& spec);

// Unique kappa > 0 with Phi(kappa) = 0, |Phi(kappa_hat)| <= tol.
// Bracket grows geometrically up to lambda_max, then bisection with a
// Newton polish.
double find_kappa(const PotentialSpec& spec, double tol = 1e-12,
                  double lambda_max = 1e3);

// Exact-in-distribution simulation on a uniform grid; jump times drawn
// exactly and inserted as extra grid points. v0 lets window-based
// samplers continue a path from its current level.
PotentialPath simulate_path(const PotentialSpec& spec, double horizon,
                            double step, RngStream& rng, double v0 = 0.0);

// CSV export, columns: x,V,is_jump.
void write_path_csv(const PotentialPath& path, const std::string& filename);

}  // namespace levydiff
