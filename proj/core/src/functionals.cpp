#include "levydiff/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace levydiff {

namespace {

// Trapezoid of e^{s*V} over [0, x] on a cadlag grid path, s = +1 or -1.
double integrate_exp(const PotentialPath& path, double x, double sign) {
  if (x < 0.0 || x > path.horizon * (1.0 + 1e-12))
    throw std::out_of_range("integrate_exp: x outside [0, horizon]");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double x0 = path.x[i];
    const double x1 = path.x[i + 1];
    if (x0 >= x) break;
    const double e0 = std::exp(sign * path.v[i]);
    if (x1 <= x) {
      const double e1 = std::exp(sign * path.v_left[i + 1]);
      acc += 0.5 * (x1 - x0) * (e0 + e1);
    } else {
      // partial cell: V interpolated linearly up to x
      const double frac = (x - x0) / (x1 - x0);
      const double vx = path.v[i] + frac * (path.v_left[i + 1] - path.v[i]);
      acc += 0.5 * (x - x0) * (e0 + std::exp(sign * vx));
      break;
    }
  }
  return acc;
}

std::vector<double> cumulative_exp(const PotentialPath& path, double sign) {
  std::vector<double> out(path.size(), 0.0);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double dx = path.x[i + 1] - path.x[i];
    acc += 0.5 * dx * (std::exp(sign * path.v[i]) +
                       std::exp(sign * path.v_left[i + 1]));
    out[i + 1] = acc;
  }
  return out;
}

}  // namespace

double scale_function(const PotentialPath& path, double x) {
  return integrate_exp(path, x, +1.0);
}

double inverse_clock(const PotentialPath& path, double x) {
  return integrate_exp(path, x, -1.0);
}

std::vector<double> cumulative_scale(const PotentialPath& path) {
  return cumulative_exp(path, +1.0);
}

std::vector<double> cumulative_clock(const PotentialPath& path) {
  return cumulative_exp(path, -1.0);
}

FunctionalSample sample_A_infinity(const PotentialSpec& spec, double eps,
                                   RngStream& rng, double step,
                                   double horizon_cap) {
  if (eps <= 0.0) throw std::invalid_argument("sample_A_infinity: eps must be > 0");
  const ValidationReport rep = validate_assumptions(spec);
  if (!rep.ok())
    throw std::invalid_argument("sample_A_infinity: " + rep.describe());
  const double delta_half = 0.5 * std::abs(rep.mean_v1);

  double next_jump = spec.has_jumps()
                         ? rng.exponential(spec.jump_intensity)
                         : std::numeric_limits<double>::infinity();
  double x = 0.0;
  double v = 0.0;
  double ev = 1.0;
  double acc = 0.0;
  std::size_t grid_idx = 1;
  while (true) {
    double x_next = grid_idx * step;
    bool at_jump = false;
    if (next_jump <= x_next + 1e-15) {
      x_next = next_jump;
      at_jump = true;
    }
    const double dx = x_next - x;
    double dv = spec.drift * dx;
    if (spec.sigma > 0.0 && dx > 0.0)
      dv += spec.sigma * std::sqrt(dx) * rng.gaussian();
    const double ev_left = ev * std::exp(dv);
    acc += 0.5 * dx * (ev + ev_left);
    v += dv;
    ev = ev_left;
    if (at_jump) {
      const double size = -rng.exponential(spec.jump_rate);
      v += size;
      ev *= std::exp(size);
      next_jump = x_next + rng.exponential(spec.jump_intensity);
    }
    x = x_next;
    if (x >= grid_idx * step - 1e-15) ++grid_idx;

    const double bound = ev / delta_half;
    if (bound < eps) {
      FunctionalSample s;
      s.value = acc;
      s.truncation_horizon = x;
      s.error_bound = bound;
      return s;
    }
    if (x > horizon_cap)
      throw std::runtime_error("sample_A_infinity: horizon cap exceeded");
  }
}

KEstimate estimate_K(const PotentialSpec& spec, std::size_t n, double eps,
                     RngStream& rng, double step) {
  if (n < 100) throw std::invalid_argument("estimate_K: need n >= 100");
  const double kappa = find_kappa(spec, 1e-12);
  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = sample_A_infinity(spec, eps, rng, step).value;
    vals[i] = std::pow(a, kappa - 1.0);
  }
  double mean = 0.0;
  for (double w : vals) mean += w;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double w : vals) var += (w - mean) * (w - mean);
  var /= static_cast<double>(n - 1);

  KEstimate k;
  k.value = mean;
  k.ci_half_width = 1.96 * std::sqrt(var / static_cast<double>(n));
  k.samples = n;

  // winsorized diagnostic: clip above the 99.9% quantile
  std::vector<double> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  const double cap = sorted[static_cast<std::size_t>(0.999 * (n - 1))];
  double wmean = 0.0;
  for (double w : vals) wmean += std::min(w, cap);
  k.winsorized = wmean / static_cast<double>(n);
  return k;
}

std::optional<double> exact_K(const PotentialSpec& spec) {
  if (spec.family == Family::DriftedBrownian) {
    const double kappa = -2.0 * spec.drift;  // delta
    return std::exp((kappa - 1.0) * std::log(2.0) - std::lgamma(kappa));
  }
  if (spec.family == Family::DriftMinusCompoundPoisson) {
    const double c = spec.drift;
    const double a = spec.jump_intensity;
    const double b = spec.jump_rate;
    const double ac = a / c;
    return std::exp(std::lgamma(ac) - std::lgamma(ac - b) -
                    std::lgamma(b + 1.0) - (ac - b - 1.0) * std::log(c));
  }
  return std::nullopt;
}

double tail_constant_A(const PotentialSpec& spec, double K) {
  if (K <= 0.0) throw std::invalid_argument("tail_constant_A: K must be > 0");
  const double kappa = find_kappa(spec, 1e-12);
  return K / phi_prime(spec, kappa);
}

}  // namespace levydiff
