// Generalized Ornstein-Uhlenbeck process Z_t = e^{V_t} U(a(t)) driven by
// a dimension-2 squared Bessel process, its stationary law and exact
// moment formulas.
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "levydiff/potential.hpp"
#include "levydiff/rng.hpp"

namespace levydiff {

struct ZPath {
  std::vector<double> t;
  std::vector<double> v;       // V at t (right-continuous)
  std::vector<double> clock;   // a(t)
  std::vector<double> u;       // U(a(t))
  std::vector<double> z;       // e^{V_t} U(a(t))
  std::vector<double> z_left;  // left limit of Z at t
};

// Exact transition of a dimension-2 squared Bessel process over dt,
// via the planar Brownian representation.
inline double besq2_step(double u, double dt, RngStream& rng) {
  const double s = std::sqrt(dt);
  const double g1 = std::sqrt(u) + s * rng.gaussian();
  const double g2 = s * rng.gaussian();
  return g1 * g1 + g2 * g2;
}

// Streams Z over the grid of a potential path; U is advanced by exact
// squared-Bessel transitions over per-cell trapezoid clock increments.
class ZSimulator {
 public:
  ZSimulator(const PotentialPath& path, double z0, RngStream& rng);

  bool done() const { return idx_ + 1 >= path_->size(); }
  // Advances one cell; returns false when the path is exhausted.
  bool step();

  double t() const { return path_->x[idx_]; }
  double v() const { return path_->v[idx_]; }
  double clock() const { return clock_; }
  double u() const { return u_; }
  double z() const { return z_; }
  double z_left() const { return z_left_; }

 private:
  const PotentialPath* path_;
  RngStream* rng_;
  std::size_t idx_ = 0;
  double clock_ = 0.0;
  double u_ = 0.0;
  double z_ = 0.0;
  double z_left_ = 0.0;
};

ZPath simulate_Z(const PotentialSpec& spec, double z0, double horizon,
                 double step, RngStream& rng);

ZPath simulate_Z_on_path(const PotentialPath& path, double z0, RngStream& rng);

// Exact draw of the stationary law: Exp(mean 2) times A(+infinity),
// truncated at eps.
double sample_Z_infinity(const PotentialSpec& spec, double eps, RngStream& rng,
                         double step = 0.005);

// E_z[Z_t] = m + (z - m) e^{t Phi(1)}; requires Phi(1) < 0.
double mean_Z(const PotentialSpec& spec, double z, double t);

// E_0[Z_t^2], equal / distinct Phi(1), Phi(2) branches; requires Phi(2) < 0.
double second_moment_Z0(const PotentialSpec& spec, double t);

// Constant of P{Z_inf > x} ~ c / x^kappa: 2^kappa Gamma(kappa+1) K / Phi'(kappa).
double stationary_tail_constant(const PotentialSpec& spec, double K);

// CSV export, columns: t,V,a,U,Z.
void write_zpath_csv(const ZPath& zp, const std::string& filename);

}  // namespace levydiff
