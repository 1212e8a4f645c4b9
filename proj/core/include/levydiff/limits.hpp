// The five limit regimes of the hitting-time theorem: normalizations,
// centerings, target laws with exact scale constants, plus samplers and
// characteristic-function-inversion CDFs.
#pragma once

#include <complex>
#include <optional>
#include <string>

#include "levydiff/potential.hpp"
#include "levydiff/rng.hpp"

namespace levydiff {

// Target law, scaled: scale * (standard law). Stable laws are completely
// asymmetric (extreme positive skew); alpha in (0,1) u (1,2).
struct LimitLaw {
  enum class Kind { Stable, Cauchy, Gaussian };
  Kind kind = Kind::Gaussian;
  double alpha = 2.0;   // Stable only
  double scale = 1.0;   // Gaussian: the standard deviation

  std::string name() const;
};

struct LimitRegime {
  char case_tag = 'e';  // 'a'..'e', selected by kappa
  double kappa = 0.0;
  double m = 0.0;       // -2 / Phi(1) when kappa > 1, else 0

  enum class Centering { None, MR, RLogR } centering = Centering::None;
  double centering_coeff = 0.0;  // m, or 2/Phi'(1) for the r log r case

  enum class Denominator { PowR, SqrtRLogR, SqrtR } denominator =
      Denominator::PowR;
  double denominator_exponent = 1.0;  // 1/kappa for PowR

  bool centering_approximate = false;  // case b: leading order only
  LimitLaw law;
};

// Case selection and all scale constants. K is required for cases a and
// c; if absent it is taken from the closed form when available.
LimitRegime theorem_constants(const PotentialSpec& spec,
                              std::optional<double> K = std::nullopt);

// Constant of the X_t / t^kappa corollary for kappa < 1; satisfies
// corollary_constant * scale^kappa = 1 with the case-(a) scale.
double corollary_constant(const PotentialSpec& spec, double K);

std::complex<double> stable_cf(double alpha, double scale, double t);
std::complex<double> cauchy_cf(double scale, double t);
std::complex<double> limit_law_cf(const LimitLaw& law, double t);

// F(x) by Gil-Pelaez inversion, clamped to [0,1]. Quadrature uses a
// singularity-taming substitution near 0 and a tail cutoff where
// |cf| < 1e-12.
double cdf_via_cf_inversion(const LimitLaw& law, double x);

// Monotone-corrected CDF evaluation on an ascending grid.
std::vector<double> cdf_grid_via_cf_inversion(const LimitLaw& law,
                                              const std::vector<double>& xs);

// Chambers-Mallows-Stuck draw matching the characteristic functions
// above (extreme skew); Gaussian is scale * N(0,1).
double sample_limit_law(const LimitLaw& law, RngStream& rng);

// Applies the regime's centering and denominator to a raw observable.
double normalize_observable(const LimitRegime& regime, double value, double r);

}  // namespace levydiff
