#include "levydiff/gou.hpp"

#include "levydiff/functionals.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace levydiff {

ZSimulator::ZSimulator(const PotentialPath& path, double z0, RngStream& rng)
    : path_(&path), rng_(&rng), u_(z0), z_(z0), z_left_(z0) {
  if (z0 < 0.0) throw std::invalid_argument("ZSimulator: z0 must be >= 0");
}

bool ZSimulator::step() {
  if (done()) return false;
  const std::size_t i = idx_;
  const double dx = path_->x[i + 1] - path_->x[i];
  // Scale-invariant update: the raw clock increment da grows like
  // e^{-V} and overflows on long paths, so the squared-Bessel
  // transition is applied to z = e^{V} u directly, with everything
  // multiplied through by e^{v_left[i+1]}. q = e^{v_left[i+1]} da stays
  // O(dx).
  const double dv = path_->v_left[i + 1] - path_->v[i];
  const double q = 0.5 * dx * (std::exp(dv) + 1.0);
  const double s = std::sqrt(q);
  const double g1 = std::sqrt(z_ * std::exp(dv)) + s * rng_->gaussian();
  const double g2 = s * rng_->gaussian();
  z_left_ = g1 * g1 + g2 * g2;
  z_ = z_left_ * std::exp(path_->v[i + 1] - path_->v_left[i + 1]);
  clock_ +=
      0.5 * dx * (std::exp(-path_->v[i]) + std::exp(-path_->v_left[i + 1]));
  u_ = z_ * std::exp(-path_->v[i + 1]);
  ++idx_;
  return true;
}

ZPath simulate_Z_on_path(const PotentialPath& path, double z0, RngStream& rng) {
  ZPath zp;
  const std::size_t n = path.size();
  zp.t.reserve(n);
  zp.v.reserve(n);
  zp.clock.reserve(n);
  zp.u.reserve(n);
  zp.z.reserve(n);
  zp.z_left.reserve(n);

  ZSimulator sim(path, z0, rng);
  auto push = [&]() {
    zp.t.push_back(sim.t());
    zp.v.push_back(sim.v());
    zp.clock.push_back(sim.clock());
    zp.u.push_back(sim.u());
    zp.z.push_back(sim.z());
    zp.z_left.push_back(sim.z_left());
  };
  push();
  while (sim.step()) push();
  return zp;
}

ZPath simulate_Z(const PotentialSpec& spec, double z0, double horizon,
                 double step, RngStream& rng) {
  const PotentialPath path = simulate_path(spec, horizon, step, rng);
  return simulate_Z_on_path(path, z0, rng);
}

double sample_Z_infinity(const PotentialSpec& spec, double eps, RngStream& rng,
                         double step) {
  const double a_inf = sample_A_infinity(spec, eps, rng, step).value;
  return rng.exponential(0.5) * a_inf;
}

double mean_Z(const PotentialSpec& spec, double z, double t) {
  const double phi1 = laplace_exponent(spec, 1.0);
  if (phi1 >= 0.0)
    throw std::domain_error(
        "mean_Z: requires Phi(1) < 0 (kappa > 1); the closed form does not "
        "apply to this potential");
  const double m = -2.0 / phi1;
  return m + (z - m) * std::exp(t * phi1);
}

double second_moment_Z0(const PotentialSpec& spec, double t) {
  const double phi1 = laplace_exponent(spec, 1.0);
  const double phi2 = laplace_exponent(spec, 2.0);
  if (phi2 >= 0.0)
    throw std::domain_error(
        "second_moment_Z0: requires Phi(2) < 0 (kappa > 2); the closed form "
        "does not apply to this potential");
  double out = 16.0 * (1.0 - std::exp(t * phi2)) / (phi1 * phi2);
  if (std::abs(phi1 - phi2) < 1e-12 * std::max(1.0, std::abs(phi1))) {
    out += 16.0 * t * std::exp(t * phi1) / phi1;
  } else {
    out += 16.0 * (std::exp(t * phi2) - std::exp(t * phi1)) /
           (phi1 * (phi2 - phi1));
  }
  return out;
}

double stationary_tail_constant(const PotentialSpec& spec, double K) {
  if (K <= 0.0)
    throw std::invalid_argument("stationary_tail_constant: K must be > 0");
  const double kappa = find_kappa(spec, 1e-12);
  return std::exp(kappa * std::log(2.0) + std::lgamma(kappa + 1.0)) * K /
         phi_prime(spec, kappa);
}

void write_zpath_csv(const ZPath& zp, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw std::runtime_error("write_zpath_csv: cannot open " + filename);
  out << "t,V,a,U,Z\n";
  char buf[160];
  for (std::size_t i = 0; i < zp.t.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g", zp.t[i],
                  zp.v[i], zp.clock[i], zp.u[i], zp.z[i]);
    out << buf << '\n';
  }
}

}  // namespace levydiff
