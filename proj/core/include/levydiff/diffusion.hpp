// Hitting times of the diffusion X in the potential V: the reduced
// additive functional I(r) = int_0^r Z_s ds and an independent direct
// construction of H(r) from the local-time field of the driving
// Brownian motion.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "levydiff/gou.hpp"
#include "levydiff/potential.hpp"
#include "levydiff/rng.hpp"

namespace levydiff {

struct HittingSample {
  enum class Method { Direct, Functional };
  double r = 0.0;
  double value = 0.0;
  Method method = Method::Functional;
  double step = 0.0;
  // Time spent left of the origin (direct construction only).
  double left_sojourn = 0.0;
};

// Right side: the specified family; left side: fixed driftless standard
// Brownian motion (independent).
struct TwoSidedPotential {
  PotentialPath right;
  PotentialPath left;  // parametrized by y >= 0, holds V_{-y}
};

// I(r) = int_0^r Z_s ds from z0 = 0, trapezoid over the Z grid.
HittingSample additive_functional_I(const PotentialSpec& spec, double r,
                                    double step, RngStream& rng);

// Same, reusing a pre-simulated potential path (the BESQ driving noise
// comes from rng).
double additive_functional_from_path(const PotentialPath& path,
                                     RngStream& rng);

// Generator extending the left-side potential window by window; receives
// (v_start, horizon, rng) and must return a path started at v_start.
using LeftPathGen =
    std::function<PotentialPath(double v0, double horizon, RngStream& rng)>;

// H(r) through the scale/time-change representation: the local-time
// field of the driving Brownian motion at its first passage of A(r) is
// a squared Bessel process of dimension 2 in the level variable down
// from A(r), continued as a squared Bessel process of dimension 0 below
// the origin; H(r) is its e^{-V}-weighted integral over the two-sided
// potential. Exact in law given the discretized potential, except that
// the left-side extension is censored at left_cap space units: the rare
// samples still unabsorbed there (the log-tailed deep-valley excursions)
// get a lower bound that keeps their rank.
double simulate_H_core(const PotentialPath& right, const LeftPathGen& left_gen,
                       double r, double left_step, RngStream& rng,
                       double left_cap = 4000.0, double* left_part = nullptr);

HittingSample simulate_H_direct(const PotentialSpec& spec, double r,
                                double step, RngStream& rng,
                                double left_step = 0.01);

struct DecayReport {
  std::vector<double> t;
  std::vector<double> survival;
  double slope = 0.0;      // log-linear fit of the survival tail
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Estimates P_{z0}{tau_level > t} on t_grid from n runs of Z and fits a
// log-linear decay.
DecayReport hitting_time_tail_probe(const PotentialSpec& spec, double z0,
                                    double level,
                                    const std::vector<double>& t_grid,
                                    std::size_t n, double step,
                                    std::uint64_t seed);

}  // namespace levydiff
