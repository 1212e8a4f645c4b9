#include "levydiff/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levydiff {

PotentialSpec PotentialSpec::drifted_brownian(double delta) {
  if (delta <= 0.0) throw std::invalid_argument("drifted_brownian: delta must be > 0");
  PotentialSpec s;
  s.family = Family::DriftedBrownian;
  s.sigma = 1.0;
  s.drift = -0.5 * delta;
  s.jump_intensity = 0.0;
  s.jump_rate = 1.0;
  return s;
}

PotentialSpec PotentialSpec::drift_minus_cp(double c, double a, double b) {
  if (c <= 0.0 || a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("drift_minus_cp: c, a, b must be > 0");
  PotentialSpec s;
  s.family = Family::DriftMinusCompoundPoisson;
  s.sigma = 0.0;
  s.drift = c;
  s.jump_intensity = a;
  s.jump_rate = b;
  return s;
}

PotentialSpec PotentialSpec::mixed(double sigma, double d, double a, double b) {
  if (sigma < 0.0 || a < 0.0 || (a > 0.0 && b <= 0.0))
    throw std::invalid_argument("mixed: bad parameters");
  PotentialSpec s;
  s.family = Family::Mixed;
  s.sigma = sigma;
  s.drift = d;
  s.jump_intensity = a;
  s.jump_rate = b;
  return s;
}

double laplace_exponent(const PotentialSpec& spec, double lambda) {
  if (lambda < 0.0)
    throw std::invalid_argument("laplace_exponent: lambda must be >= 0");
  double phi = 0.5 * spec.sigma * spec.sigma * lambda * lambda +
               spec.drift * lambda;
  if (spec.jump_intensity > 0.0)
    phi -= spec.jump_intensity * lambda / (lambda + spec.jump_rate);
  return phi;
}

double phi_prime(const PotentialSpec& spec, double lambda) {
  if (lambda < 0.0)
    throw std::invalid_argument("phi_prime: lambda must be >= 0");
  double d = spec.sigma * spec.sigma * lambda + spec.drift;
  if (spec.jump_intensity > 0.0) {
    const double lb = lambda + spec.jump_rate;
    d -= spec.jump_intensity * spec.jump_rate / (lb * lb);
  }
  return d;
}

std::string ValidationReport::describe() const {
  std::ostringstream os;
  if (!parameters_valid) os << "invalid parameters; ";
  if (!drifts_to_minus_infinity)
    os << "E[V_1] = " << mean_v1 << " >= 0, potential does not drift to -infinity; ";
  if (!not_subordinator_opposite)
    os << "no increasing component, potential is the opposite of a subordinator; ";
  if (!left_side_integral_diverges)
    os << "left-side scale integral does not diverge; ";
  std::string s = os.str();
  if (s.empty()) return "valid";
  s.resize(s.size() - 2);
  return s;
}

ValidationReport validate_assumptions(const PotentialSpec& spec) {
  ValidationReport rep;
  rep.parameters_valid =
      spec.sigma >= 0.0 && spec.jump_intensity >= 0.0 &&
      (spec.jump_intensity == 0.0 || spec.jump_rate > 0.0);
  rep.mean_v1 = spec.drift -
                (spec.jump_intensity > 0.0
                     ? spec.jump_intensity / spec.jump_rate
                     : 0.0);
  rep.drifts_to_minus_infinity = rep.mean_v1 < 0.0;
  rep.not_subordinator_opposite = spec.sigma > 0.0 || spec.drift > 0.0;
  // Left side is fixed to a driftless standard Brownian motion, whose
  // exponential integral diverges almost surely.
  rep.left_side_integral_diverges = true;
  return rep;
}

double find_kappa(const PotentialSpec& spec, double tol, double lambda_max) {
  const ValidationReport rep = validate_assumptions(spec);
  if (!rep.ok())
    throw std::invalid_argument("find_kappa: assumptions violated: " + rep.describe());
  if (tol <= 0.0) throw std::invalid_argument("find_kappa: tol must be > 0");

  // Phi < 0 on (0, kappa), Phi > 0 past kappa and Phi -> infinity.
  double lo = 1e-12;
  double hi = 1.0;
  while (laplace_exponent(spec, hi) <= 0.0) {
    hi *= 2.0;
    if (hi > lambda_max)
      throw std::runtime_error("find_kappa: failed to bracket root below lambda_max");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (laplace_exponent(spec, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double kappa = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double f = laplace_exponent(spec, kappa);
    const double fp = phi_prime(spec, kappa);
    if (fp <= 0.0) break;
    const double next = kappa - f / fp;
    if (next <= lo || next >= hi * 2.0) break;
    kappa = next;
    if (std::abs(f) <= tol) break;
  }
  if (std::abs(laplace_exponent(spec, kappa)) > tol)
    throw std::runtime_error("find_kappa: residual above tolerance");
  return kappa;
}

PotentialPath simulate_path(const PotentialSpec& spec, double horizon,
                            double step, RngStream& rng, double v0) {
  if (horizon <= 0.0 || step <= 0.0)
    throw std::invalid_argument("simulate_path: horizon and step must be > 0");

  PotentialPath path;
  path.step = step;
  path.horizon = horizon;

  const std::size_t n_cells = static_cast<std::size_t>(std::ceil(horizon / step - 1e-12));
  path.x.reserve(n_cells + 2);
  path.v.reserve(n_cells + 2);
  path.v_left.reserve(n_cells + 2);

  path.x.push_back(0.0);
  path.v.push_back(v0);
  path.v_left.push_back(v0);

  double next_jump = spec.has_jumps()
                         ? rng.exponential(spec.jump_intensity)
                         : std::numeric_limits<double>::infinity();

  double x = 0.0;
  double v = v0;
  std::size_t grid_idx = 1;
  while (x < horizon - 1e-12 * horizon) {
    double x_next = std::min(grid_idx * step, horizon);
    bool at_jump = false;
    if (next_jump < x_next - 1e-15) {
      x_next = next_jump;
      at_jump = true;
    } else if (next_jump <= x_next + 1e-15) {
      at_jump = true;  // jump lands on a grid point
    }
    const double dx = x_next - x;
    double dv = spec.drift * dx;
    if (spec.sigma > 0.0) dv += spec.sigma * std::sqrt(dx) * rng.gaussian();
    const double v_left = v + dv;
    double v_new = v_left;
    if (at_jump) {
      const double size = -rng.exponential(spec.jump_rate);
      v_new += size;
      path.jumps.push_back({x_next, size});
      next_jump = x_next + rng.exponential(spec.jump_intensity);
    }
    path.x.push_back(x_next);
    path.v_left.push_back(v_left);
    path.v.push_back(v_new);
    x = x_next;
    v = v_new;
    if (x >= grid_idx * step - 1e-15) ++grid_idx;
  }
  return path;
}

void write_path_csv(const PotentialPath& path, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw std::runtime_error("write_path_csv: cannot open " + filename);
  out << "x,V,is_jump\n";
  std::size_t j = 0;
  char buf[64];
  for (std::size_t i = 0; i < path.size(); ++i) {
    const bool is_jump = j < path.jumps.size() &&
                         path.jumps[j].location == path.x[i];
    if (is_jump) ++j;
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%d", path.x[i], path.v[i],
                  is_jump ? 1 : 0);
    out << buf << '\n';
  }
}

}  // namespace levydiff
