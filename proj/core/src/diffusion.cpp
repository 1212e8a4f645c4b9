#include "levydiff/diffusion.hpp"

#include "levydiff/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levydiff {

namespace {

// Exact dimension-0 squared Bessel transition (the absorbed branching
// limit): compound Poisson with Poisson(q / (2 du)) jumps of mean 2 du.
// Absorption at 0 is hit exactly.
double besq0_step(double q, double du, RngStream& rng) {
  if (q <= 0.0) return 0.0;
  if (du <= 0.0) return q;
  const double mean = q / (2.0 * du);
  if (mean > 1e8) {
    // Gaussian limit of the compound transition. Absorption within one
    // cell has probability exp(-mean), which is zero in double
    // precision, and the Poisson sampler itself breaks down for such
    // means (its result does not even fit in the integer type).
    return std::max(0.0, q + std::sqrt(4.0 * q * du) * rng.gaussian());
  }
  const long n = rng.poisson(mean);
  if (n == 0) return 0.0;
  return rng.gamma(static_cast<double>(n), 2.0 * du);
}

}  // namespace

double additive_functional_from_path(const PotentialPath& path,
                                     RngStream& rng) {
  ZSimulator sim(path, 0.0, rng);
  double acc = 0.0;
  double t_prev = sim.t();
  double z_prev = sim.z();
  while (sim.step()) {
    acc += 0.5 * (sim.t() - t_prev) * (z_prev + sim.z_left());
    t_prev = sim.t();
    z_prev = sim.z();
  }
  return acc;
}

HittingSample additive_functional_I(const PotentialSpec& spec, double r,
                                    double step, RngStream& rng) {
  if (r <= 0.0) throw std::invalid_argument("additive_functional_I: r must be > 0");
  const PotentialPath path = simulate_path(spec, r, step, rng);
  HittingSample s;
  s.r = r;
  s.value = additive_functional_from_path(path, rng);
  s.method = HittingSample::Method::Functional;
  s.step = step;
  return s;
}

double simulate_H_core(const PotentialPath& right, const LeftPathGen& left_gen,
                       double r, double left_step, RngStream& rng,
                       double left_cap, double* left_part) {
  const std::vector<double> A = cumulative_scale(right);
  const std::size_t n = right.size();
  if (n < 2) throw std::invalid_argument("simulate_H_core: degenerate right path");

  // J2: walk down from x = r to x = 0; the local-time profile at level
  // A(x) is a BESQ(2) started from 0 in u = A(r) - A(x).
  double q = 0.0;
  double acc = 0.0;
  for (std::size_t i = n - 1; i > 0; --i) {
    const double dx = right.x[i] - right.x[i - 1];
    const double du = A[i] - A[i - 1];
    const double w_top = std::exp(-right.v_left[i]) * q;
    q = besq2_step(q, du, rng);
    acc += 0.5 * dx * (w_top + std::exp(-right.v[i - 1]) * q);
  }

  // J1: continue below the origin as BESQ(0) until absorption, over the
  // left-side potential extended window by window.
  // The left sojourn is log-tailed when the left potential is recurrent:
  // a deep potential valley explored before absorption contributes
  // exp(depth), and depth grows like sqrt(extension). Samples that are
  // still alive at the cap are already astronomically large, so they are
  // censored there: the returned value is a lower bound that preserves
  // the sample's rank among all realistic draws.
  const double window = 50.0;
  const double acc_right = acc;
  double y_base = 0.0;
  double v0 = 0.0;
  while (q > 0.0) {
    if (y_base > left_cap) break;
    const PotentialPath left = left_gen(v0, window, rng);
    for (std::size_t j = 0; j + 1 < left.size() && q > 0.0; ++j) {
      const double dy = left.x[j + 1] - left.x[j];
      const double du =
          0.5 * dy * (std::exp(left.v[j]) + std::exp(left.v_left[j + 1]));
      const double w_bottom = std::exp(-left.v[j]) * q;
      q = besq0_step(q, du, rng);
      acc += 0.5 * dy * (w_bottom + std::exp(-left.v_left[j + 1]) * q);
    }
    v0 = left.v.back();
    y_base += window;
  }
  if (left_part) *left_part = acc - acc_right;
  (void)r;
  return acc;
}

HittingSample simulate_H_direct(const PotentialSpec& spec, double r,
                                double step, RngStream& rng,
                                double left_step) {
  if (r <= 0.0) throw std::invalid_argument("simulate_H_direct: r must be > 0");
  const PotentialPath right = simulate_path(spec, r, step, rng);
  // Fixed left side: driftless standard Brownian motion.
  const PotentialSpec left_spec = PotentialSpec::mixed(1.0, 0.0, 0.0, 1.0);
  LeftPathGen gen = [&left_spec, left_step](double v0, double horizon,
                                            RngStream& g) {
    return simulate_path(left_spec, horizon, left_step, g, v0);
  };
  HittingSample s;
  s.r = r;
  s.value = simulate_H_core(right, gen, r, left_step, rng, 4000.0,
                            &s.left_sojourn);
  s.method = HittingSample::Method::Direct;
  s.step = step;
  return s;
}

DecayReport hitting_time_tail_probe(const PotentialSpec& spec, double z0,
                                    const double level,
                                    const std::vector<double>& t_grid,
                                    std::size_t n, double step,
                                    std::uint64_t seed) {
  if (level <= 0.0)
    throw std::invalid_argument("hitting_time_tail_probe: level must be > 0");
  if (t_grid.empty() || n == 0)
    throw std::invalid_argument("hitting_time_tail_probe: empty probe");
  const double horizon = *std::max_element(t_grid.begin(), t_grid.end());
  const bool downward = z0 > level;

  std::vector<std::size_t> survivors(t_grid.size(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = RngStream::substream(seed, i);
    const PotentialPath path = simulate_path(spec, horizon, step, rng);
    ZSimulator sim(path, z0, rng);
    double tau = horizon + 1.0;
    while (sim.step()) {
      const bool hit = downward ? sim.z() <= level : sim.z() >= level;
      if (hit) {
        tau = sim.t();
        break;
      }
    }
    for (std::size_t k = 0; k < t_grid.size(); ++k)
      if (tau > t_grid[k]) ++survivors[k];
  }

  DecayReport rep;
  rep.t = t_grid;
  rep.survival.resize(t_grid.size());
  for (std::size_t k = 0; k < t_grid.size(); ++k)
    rep.survival[k] = static_cast<double>(survivors[k]) / static_cast<double>(n);

  // OLS on log-survival where the estimate is resolvable.
  const double floor_count = 10.0 / static_cast<double>(n);
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  std::size_t m = 0;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (rep.survival[k] < floor_count || rep.survival[k] >= 1.0) continue;
    const double xv = t_grid[k];
    const double yv = std::log(rep.survival[k]);
    sx += xv; sy += yv; sxx += xv * xv; sxy += xv * yv; syy += yv * yv;
    ++m;
  }
  if (m >= 3) {
    const double dm = static_cast<double>(m);
    const double cov = sxy - sx * sy / dm;
    const double vx = sxx - sx * sx / dm;
    const double vy = syy - sy * sy / dm;
    rep.slope = cov / vx;
    rep.intercept = (sy - rep.slope * sx) / dm;
    rep.r_squared = (vy > 0.0) ? (cov * cov) / (vx * vy) : 0.0;
  }
  return rep;
}

}  // namespace levydiff
