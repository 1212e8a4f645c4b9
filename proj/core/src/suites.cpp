#include "levydiff/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "levydiff/diffusion.hpp"
#include "levydiff/functionals.hpp"
#include "levydiff/gou.hpp"
#include "levydiff/limits.hpp"
#include "levydiff/potential.hpp"

namespace levydiff {

namespace {

std::vector<double> mc(std::size_t n, std::uint64_t seed, int workers,
                       const std::function<double(RngStream&)>& draw) {
  return parallel_map(n, workers, [&](std::size_t i) {
    RngStream rng = RngStream::substream(seed, i);
    return draw(rng);
  });
}

// Upper-bound row: passes when value <= bound.
void add_upper(ResultTable& t, const std::string& name, double value,
               double bound, const std::string& provenance) {
  ResultRow row;
  row.name = name;
  row.value = value;
  row.has_target = true;
  row.target = bound;
  row.provenance = provenance;
  row.pass = value <= bound;
  t.add(std::move(row));
}

double z_at_horizon(const PotentialSpec& spec, double z0, double horizon,
                    double step, RngStream& rng) {
  const PotentialPath path = simulate_path(spec, horizon, step, rng);
  ZSimulator sim(path, z0, rng);
  while (sim.step()) {
  }
  return sim.z();
}

double law_quantile(const LimitLaw& law, double p) {
  double lo = -1.0, hi = 1.0;
  while (cdf_via_cf_inversion(law, lo) > p) lo *= 2.0;
  while (cdf_via_cf_inversion(law, hi) < p) hi *= 2.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cdf_via_cf_inversion(law, mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Inverse CDF of the density 6x/(1+x)^4 on (0, inf). In w = 1/(1+x) the
// CDF is 1 - 3w^2 + 2w^3, monotone decreasing in w on (0,1).
double inverse_cdf_6x(double u) {
  double lo = 0.0, hi = 1.0;  // w-bracket
  for (int i = 0; i < 60; ++i) {
    const double w = 0.5 * (lo + hi);
    const double f = 1.0 - 3.0 * w * w + 2.0 * w * w * w;
    (f > u ? lo : hi) = w;
  }
  const double w = 0.5 * (lo + hi);
  return 1.0 / w - 1.0;
}

double require_K(const PotentialSpec& spec, std::uint64_t seed, int workers) {
  if (auto k = exact_K(spec)) return *k;
  const double kappa = find_kappa(spec);
  const auto vals = mc(5000, seed ^ 0xabcdefULL, workers, [&](RngStream& rng) {
    return std::pow(sample_A_infinity(spec, 1e-3, rng).value, kappa - 1.0);
  });
  return sample_mean(vals);
}

// ---- named suites -------------------------------------------------------

ResultTable suite_kappa(std::uint64_t seed, int workers) {
  (void)seed;
  (void)workers;
  ResultTable t;
  t.kind = "kappa";
  t.add_checked("kappa_cp_1_3_1",
                find_kappa(PotentialSpec::drift_minus_cp(1, 3, 1)), 2.0, 1e-9,
                "closed-form root a/c - b");
  t.add_checked("kappa_cp_1_4_1",
                find_kappa(PotentialSpec::drift_minus_cp(1, 4, 1)), 3.0, 1e-9,
                "closed-form root a/c - b");
  t.add_checked("kappa_brownian_1.5",
                find_kappa(PotentialSpec::drifted_brownian(1.5)), 1.5, 1e-9,
                "closed-form root delta");
  return t;
}

ResultTable suite_k_exact(std::uint64_t seed, int workers) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(1.5);
  const double kappa = 1.5;
  const std::size_t n = 100000;
  const double eps = 1e-4, step = 5e-3;
  const auto vals = mc(n, seed, workers, [&](RngStream& rng) {
    return std::pow(sample_A_infinity(spec, eps, rng, step).value,
                    kappa - 1.0);
  });
  const double k_hat = sample_mean(vals);
  const double ci = 1.96 * std::sqrt(sample_variance(vals) / double(n));
  const double k_exact = *exact_K(spec);

  ResultTable t;
  t.kind = "k-exact";
  t.seed = seed;
  t.samples = n;
  t.step = step;
  t.epsilon = eps;
  t.add_checked("K_estimate", k_hat, k_exact, 0.03 * k_exact,
                "closed-form moment constant 2^{k-1}/Gamma(k)");
  t.add_info("K_ci_half_width", ci);
  t.add_checked("K_ci_covers", std::abs(k_hat - k_exact) <= ci ? 1.0 : 0.0,
                1.0, 0.0, "95% CI coverage");
  return t;
}

ResultTable suite_dufresne(std::uint64_t seed, int workers) {
  const std::size_t n = 100000;
  const double eps = 1e-3, step = 4e-3;
  ResultTable t;
  t.kind = "dufresne";
  t.seed = seed;
  t.samples = n;
  t.step = step;
  t.epsilon = eps;
  int part = 0;
  for (double kappa : {1.5, 3.0}) {
    const PotentialSpec spec = PotentialSpec::drifted_brownian(kappa);
    const auto a_vals = mc(n, seed + part, workers, [&](RngStream& rng) {
      return sample_A_infinity(spec, eps, rng, step).value;
    });
    const auto oracle = mc(n, seed + 100 + part, workers, [&](RngStream& rng) {
      return 2.0 / rng.gamma(kappa);
    });
    char name[64];
    std::snprintf(name, sizeof(name), "ks_kappa_%g", kappa);
    add_upper(t, name, ks_distance(a_vals, oracle), 0.015,
              "inverse-gamma oracle 2/gamma_k");
    ++part;
  }
  return t;
}

ResultTable suite_example12(std::uint64_t seed, int workers) {
  const PotentialSpec spec = PotentialSpec::drift_minus_cp(1, 3, 1);
  const std::size_t n = 100000;
  const double eps = 1e-3, step = 4e-3;
  const auto a_vals = mc(n, seed, workers, [&](RngStream& rng) {
    return sample_A_infinity(spec, eps, rng, step).value;
  });
  const auto oracle = mc(n, seed + 100, workers, [&](RngStream& rng) {
    return inverse_cdf_6x(rng.uniform());
  });
  ResultTable t;
  t.kind = "example12";
  t.seed = seed;
  t.samples = n;
  t.step = step;
  t.epsilon = eps;
  add_upper(t, "ks_density_6x", ks_distance(a_vals, oracle), 0.015,
            "inverse-CDF oracle for density 6x/(1+x)^4");
  return t;
}

ResultTable suite_lemma61(std::uint64_t seed, int workers) {
  const std::size_t n = 100000;
  const double step = 1e-3, horizon = 1.0;
  ResultTable t;
  t.kind = "lemma61";
  t.seed = seed;
  t.samples = n;
  t.step = step;

  const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
  {
    const auto z = mc(n, seed, workers, [&](RngStream& rng) {
      return z_at_horizon(b3, 1.0, horizon, step, rng);
    });
    const double target = mean_Z(b3, 1.0, horizon);
    t.add_checked("mean_Z1_from_1", sample_mean(z), target, 0.02 * target,
                  "exact first-moment formula");
  }
  {
    const auto z = mc(n, seed + 1, workers, [&](RngStream& rng) {
      const double v = z_at_horizon(b3, 0.0, horizon, step, rng);
      return v * v;
    });
    const double target = second_moment_Z0(b3, horizon);
    t.add_checked("second_moment_equal_branch", sample_mean(z), target,
                  0.03 * target, "exact second-moment formula");
  }
  {
    const PotentialSpec cp = PotentialSpec::drift_minus_cp(1, 4, 1);
    const auto z = mc(n, seed + 2, workers, [&](RngStream& rng) {
      const double v = z_at_horizon(cp, 0.0, horizon, step, rng);
      return v * v;
    });
    const double target = second_moment_Z0(cp, horizon);
    t.add_checked("second_moment_distinct_branch", sample_mean(z), target,
                  0.05 * target, "exact second-moment formula");
  }
  return t;
}

ResultTable suite_stationary(std::uint64_t seed, int workers) {
  ResultTable t;
  t.kind = "stationary";
  t.seed = seed;
  t.step = 5e-3;
  t.epsilon = 1e-3;
  {
    const PotentialSpec b3 = PotentialSpec::drifted_brownian(3.0);
    const std::size_t n = 100000;
    t.samples = n;
    const auto z = mc(n, seed, workers, [&](RngStream& rng) {
      return sample_Z_infinity(b3, 1e-3, rng, 5e-3);
    });
    t.add_checked("mean_Z_inf", sample_mean(z), 2.0, 0.04,
                  "stationary mean m = -2/Phi(1)");
  }
  {
    const PotentialSpec b15 = PotentialSpec::drifted_brownian(1.5);
    const std::size_t n = 200000;
    const auto z = mc(n, seed + 1, workers, [&](RngStream& rng) {
      return sample_Z_infinity(b15, 1e-3, rng, 5e-3);
    });
    t.add_checked("hill_index", hill_tail_index(z, 0.01), 1.5, 0.15,
                  "stationary tail exponent kappa");
    const double x = 50.0;
    double p = 0.0;
    for (double v : z)
      if (v > x) p += 1.0;
    p /= double(n);
    t.add_checked("tail_x50_scaled", std::pow(x, 1.5) * p, 8.0, 1.2,
                  "tail constant 4^kappa");
  }
  return t;
}

ResultTable suite_thm11a(std::uint64_t seed, int workers) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(0.5);
  const double r = 100.0, step = 1e-3;
  const std::size_t n = 2000;
  const LimitRegime regime = theorem_constants(spec);
  const auto vals = mc(n, seed, workers, [&](RngStream& rng) {
    const double i_r = additive_functional_I(spec, r, step, rng).value;
    return normalize_observable(regime, i_r, r);
  });
  auto cdf = [&](double x) { return cdf_via_cf_inversion(regime.law, x); };
  const double med = law_quantile(regime.law, 0.5);

  ResultTable t;
  t.kind = "thm11a";
  t.seed = seed;
  t.samples = n;
  t.step = step;
  add_upper(t, "ks_vs_stable_half", ks_distance(vals, cdf), 0.08,
            "CF-inversion CDF, alpha = 1/2");
  t.add_checked("median", sample_quantile(vals, 0.5), med, 0.15 * med,
                "limit-law median by CF inversion");
  t.add_info("limit_scale", regime.law.scale);
  return t;
}

ResultTable suite_thm11e(std::uint64_t seed, int workers) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  const double r = 500.0, step = 5e-3;
  const std::size_t n = 2000;
  const LimitRegime regime = theorem_constants(spec);
  const auto vals = mc(n, seed, workers, [&](RngStream& rng) {
    const double i_r = additive_functional_I(spec, r, step, rng).value;
    return normalize_observable(regime, i_r, r);
  });
  const double var_target = regime.law.scale * regime.law.scale;
  auto cdf = [&](double x) { return cdf_via_cf_inversion(regime.law, x); };

  ResultTable t;
  t.kind = "thm11e";
  t.seed = seed;
  t.samples = n;
  t.step = step;
  t.add_checked("variance", sample_variance(vals), var_target,
                0.15 * var_target, "limit variance 8(Phi(2)-4Phi(1))/(Phi(1)^3 Phi(2))");
  add_upper(t, "ks_vs_gaussian", ks_distance(vals, cdf), 0.06,
            "Gaussian CDF");
  return t;
}

ResultTable suite_thm11b(std::uint64_t seed, int workers) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(1.0);
  const double r = 200.0, step = 2e-3;
  const std::size_t n = 2000;
  const LimitRegime regime = theorem_constants(spec);
  const auto vals = mc(n, seed, workers, [&](RngStream& rng) {
    const double i_r = additive_functional_I(spec, r, step, rng).value;
    return normalize_observable(regime, i_r, r);
  });
  const double target_iqr =
      law_quantile(regime.law, 0.75) - law_quantile(regime.law, 0.25);
  const double sample_iqr =
      sample_quantile(vals, 0.75) - sample_quantile(vals, 0.25);

  ResultTable t;
  t.kind = "thm11b";
  t.seed = seed;
  t.samples = n;
  t.step = step;
  t.add_info("sample_iqr", sample_iqr);
  t.add_info("limit_iqr", target_iqr);
  // Centering is leading-order only, so only the spread is checked, to a
  // factor of 2.
  t.add_checked("iqr_log2_ratio", std::log2(sample_iqr / target_iqr), 0.0,
                1.0, "asymmetric Cauchy scale pi/Phi'(1)");
  return t;
}

ResultTable suite_cross_validate(std::uint64_t seed, int workers) {
  const PotentialSpec spec = PotentialSpec::drifted_brownian(1.0);
  const double step = 0.01;
  const std::size_t n = 5000;
  ResultTable t;
  t.kind = "cross-validate";
  t.seed = seed;
  t.samples = n;
  t.step = step;

  const double threshold = 2.0 * std::sqrt(2.0 / double(n));
  double left5 = 0.0, left10 = 0.0;
  for (double r : {5.0, 10.0}) {
    // Identical substreams give H and I the same potential path draw;
    // only the local-time noise differs.
    const auto h = mc(n, seed, workers, [&](RngStream& rng) {
      return simulate_H_direct(spec, r, step, rng).value;
    });
    const auto i = mc(n, seed, workers, [&](RngStream& rng) {
      const PotentialPath path = simulate_path(spec, r, step, rng);
      return additive_functional_from_path(path, rng);
    });
    char name[64];
    std::snprintf(name, sizeof(name), "signed_ks_r%g", r);
    add_upper(t, name, ks_signed_plus(h, i), threshold,
              "H stochastically dominates I");
    // The time spent left of the origin is log-tailed (no finite mean;
    // even heavily trimmed means are dominated by near-tail draws), and
    // any H-vs-I location gap also picks up the growing spread of I
    // itself. The boundedness-in-r claim is therefore checked on the
    // left sojourn directly, located by its median.
    const auto left = mc(n, seed, workers, [&](RngStream& rng) {
      return simulate_H_direct(spec, r, step, rng).left_sojourn;
    });
    const double med = sample_quantile(left, 0.5);
    std::snprintf(name, sizeof(name), "median_left_sojourn_r%g", r);
    t.add_info(name, med);
    (r == 5.0 ? left5 : left10) = med;
  }
  t.add_checked("left_sojourn_ratio", left10 / left5, 1.0, 1.0,
                "left-of-origin sojourn is bounded in r");
  return t;
}

ResultTable suite_tail_probe(std::uint64_t seed, int workers) {
  (void)workers;  // the probe is already index-seeded internally
  const PotentialSpec spec = PotentialSpec::drifted_brownian(3.0);
  std::vector<double> grid;
  for (int k = 1; k <= 16; ++k) grid.push_back(0.25 * k);
  const DecayReport rep =
      hitting_time_tail_probe(spec, 2.0, 1.0, grid, 10000, 5e-3, seed);
  ResultTable t;
  t.kind = "tail-probe";
  t.seed = seed;
  t.samples = 10000;
  t.step = 5e-3;
  t.add_info("decay_rate", -rep.slope);
  t.add_checked("log_survival_r2", rep.r_squared, 1.0, 0.05,
                "exponential crossing-time tail");
  return t;
}

ResultTable suite_stable(std::uint64_t seed, int workers) {
  const std::size_t n = 100000;
  std::vector<LimitLaw> laws(4);
  laws[0] = {LimitLaw::Kind::Stable, 0.5, 1.0};
  laws[1] = {LimitLaw::Kind::Stable, 1.5, 1.0};
  laws[2] = {LimitLaw::Kind::Cauchy, 1.0, 1.0};
  laws[3] = {LimitLaw::Kind::Gaussian, 2.0, 1.0};

  ResultTable t;
  t.kind = "stable";
  t.seed = seed;
  t.samples = n;
  int part = 0;
  for (const LimitLaw& law : laws) {
    const auto draws = mc(n, seed + part, workers, [&](RngStream& rng) {
      return sample_limit_law(law, rng);
    });
    auto cdf = [&](double x) { return cdf_via_cf_inversion(law, x); };
    add_upper(t, "ks_" + law.name(), ks_distance(draws, cdf), 0.01,
              "CF-inversion CDF");
    double worst = 0.0;
    for (double tt : {0.5, 1.0, 2.0}) {
      std::complex<double> ecf(0.0, 0.0);
      for (double x : draws)
        ecf += std::complex<double>(std::cos(tt * x), std::sin(tt * x));
      ecf /= double(n);
      worst = std::max(worst, std::abs(ecf - limit_law_cf(law, tt)));
    }
    add_upper(t, "cf_err_" + law.name(), worst, 4.0 / std::sqrt(double(n)),
              "closed-form characteristic function");
    ++part;
  }
  return t;
}

ResultTable suite_determinism(std::uint64_t seed, int workers) {
  (void)workers;
  ExperimentConfig cfg;
  cfg.spec = PotentialSpec::drifted_brownian(1.5);
  cfg.kind = "K-estimate";
  cfg.samples = 2000;
  cfg.epsilon = 1e-3;
  cfg.step = 5e-3;
  cfg.seed = seed;

  cfg.workers = 1;
  const std::string one = run_experiment(cfg).to_json();
  const std::string one_again = run_experiment(cfg).to_json();
  cfg.workers = 3;
  const std::string three = run_experiment(cfg).to_json();

  ResultTable t;
  t.kind = "determinism";
  t.seed = seed;
  t.samples = cfg.samples;
  t.step = cfg.step;
  t.epsilon = cfg.epsilon;
  t.add_checked("json_identical_repeat", one == one_again ? 1.0 : 0.0, 1.0,
                0.0, "byte-identical serialization");
  t.add_checked("json_identical_workers_1_vs_3", one == three ? 1.0 : 0.0,
                1.0, 0.0, "worker-count invariance");
  return t;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"kappa",     "k-exact",        "dufresne",   "example12",
          "lemma61",   "stationary",     "thm11a",     "thm11e",
          "thm11b",    "cross-validate", "tail-probe", "stable",
          "determinism"};
}

ResultTable run_suite(const std::string& name, std::uint64_t seed,
                      int workers) {
  if (name == "kappa") return suite_kappa(seed, workers);
  if (name == "k-exact") return suite_k_exact(seed, workers);
  if (name == "dufresne") return suite_dufresne(seed, workers);
  if (name == "example12") return suite_example12(seed, workers);
  if (name == "lemma61") return suite_lemma61(seed, workers);
  if (name == "stationary") return suite_stationary(seed, workers);
  if (name == "thm11a") return suite_thm11a(seed, workers);
  if (name == "thm11e") return suite_thm11e(seed, workers);
  if (name == "thm11b") return suite_thm11b(seed, workers);
  if (name == "cross-validate") return suite_cross_validate(seed, workers);
  if (name == "tail-probe") return suite_tail_probe(seed, workers);
  if (name == "stable") return suite_stable(seed, workers);
  if (name == "determinism") return suite_determinism(seed, workers);
  std::string msg = "unknown suite '" + name + "'; available:";
  for (const auto& s : suite_names()) msg += " " + s;
  throw std::invalid_argument(msg);
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("run_experiment: samples >= 1");
  if (cfg.step <= 0.0 || cfg.epsilon <= 0.0)
    throw std::invalid_argument("run_experiment: step and epsilon must be > 0");
  const int workers = effective_workers(cfg);

  ResultTable t;
  t.kind = cfg.kind;
  t.seed = cfg.seed;
  t.samples = cfg.samples;
  t.step = cfg.step;
  t.epsilon = cfg.epsilon;

  if (cfg.kind == "K-estimate") {
    const double kappa = find_kappa(cfg.spec);
    const auto vals = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      return std::pow(sample_A_infinity(cfg.spec, cfg.epsilon, rng, cfg.step)
                          .value,
                      kappa - 1.0);
    });
    const double k_hat = sample_mean(vals);
    const double ci =
        cfg.samples > 1
            ? 1.96 * std::sqrt(sample_variance(vals) / double(cfg.samples))
            : 0.0;
    if (auto exact = exact_K(cfg.spec)) {
      t.add_checked("K_estimate", k_hat, *exact, 0.03 * *exact,
                    "closed-form moment constant");
    } else {
      t.add_info("K_estimate", k_hat);
    }
    t.add_info("K_ci_half_width", ci);
  } else if (cfg.kind == "dufresne") {
    if (cfg.spec.family != Family::DriftedBrownian)
      throw std::invalid_argument(
          "dufresne: inverse-gamma identity applies to the drifted Brownian "
          "family only");
    const double kappa = find_kappa(cfg.spec);
    const auto a_vals = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      return sample_A_infinity(cfg.spec, cfg.epsilon, rng, cfg.step).value;
    });
    const auto oracle =
        mc(cfg.samples, cfg.seed + 100, workers,
           [&](RngStream& rng) { return 2.0 / rng.gamma(kappa); });
    add_upper(t, "ks_vs_inverse_gamma", ks_distance(a_vals, oracle), 0.015,
              "inverse-gamma oracle 2/gamma_k");
  } else if (cfg.kind == "Z-infinity-tail") {
    const double kappa = find_kappa(cfg.spec);
    const auto z = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      return sample_Z_infinity(cfg.spec, cfg.epsilon, rng, cfg.step);
    });
    t.add_checked("hill_index", hill_tail_index(z, 0.01), kappa, 0.15,
                  "stationary tail exponent kappa");
    if (kappa > 1.0) {
      const double m = -2.0 / laplace_exponent(cfg.spec, 1.0);
      t.add_checked("mean_Z_inf", sample_mean(z), m, 0.02 * m,
                    "stationary mean m = -2/Phi(1)");
    }
    double p = 0.0;
    for (double v : z)
      if (v > cfg.level) p += 1.0;
    t.add_info("tail_scaled_at_level",
               std::pow(cfg.level, kappa) * p / double(cfg.samples));
  } else if (cfg.kind == "moment-check") {
    const auto z = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      return z_at_horizon(cfg.spec, cfg.z0, cfg.horizon, cfg.step, rng);
    });
    const double target = mean_Z(cfg.spec, cfg.z0, cfg.horizon);
    t.add_checked("mean_Z", sample_mean(z), target, 0.02 * target,
                  "exact first-moment formula");
    if (cfg.z0 == 0.0 && laplace_exponent(cfg.spec, 2.0) < 0.0) {
      std::vector<double> sq(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) sq[i] = z[i] * z[i];
      const double target2 = second_moment_Z0(cfg.spec, cfg.horizon);
      t.add_checked("second_moment_Z", sample_mean(sq), target2,
                    0.05 * target2, "exact second-moment formula");
    }
  } else if (cfg.kind == "theorem-verify") {
    const LimitRegime regime =
        theorem_constants(cfg.spec, require_K(cfg.spec, cfg.seed, workers));
    const auto vals = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      const double i_r =
          additive_functional_I(cfg.spec, cfg.r, cfg.step, rng).value;
      return normalize_observable(regime, i_r, cfg.r);
    });
    t.add_info("case", double(regime.case_tag - 'a' + 1));
    if (regime.law.kind == LimitLaw::Kind::Gaussian) {
      const double var_target = regime.law.scale * regime.law.scale;
      t.add_checked("variance", sample_variance(vals), var_target,
                    0.15 * var_target, "limit variance");
      auto cdf = [&](double x) { return cdf_via_cf_inversion(regime.law, x); };
      add_upper(t, "ks_vs_limit", ks_distance(vals, cdf), 0.06,
                "Gaussian CDF");
    } else if (regime.law.kind == LimitLaw::Kind::Cauchy) {
      const double target_iqr =
          law_quantile(regime.law, 0.75) - law_quantile(regime.law, 0.25);
      const double sample_iqr =
          sample_quantile(vals, 0.75) - sample_quantile(vals, 0.25);
      t.add_checked("iqr_log2_ratio", std::log2(sample_iqr / target_iqr),
                    0.0, 1.0, "asymmetric Cauchy scale");
    } else {
      auto cdf = [&](double x) { return cdf_via_cf_inversion(regime.law, x); };
      add_upper(t, "ks_vs_limit", ks_distance(vals, cdf), 0.08,
                "CF-inversion CDF");
      const double med = law_quantile(regime.law, 0.5);
      t.add_checked("median", sample_quantile(vals, 0.5), med, 0.15 * med,
                    "limit-law median");
    }
  } else if (cfg.kind == "cross-validate") {
    const auto h = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      return simulate_H_direct(cfg.spec, cfg.r, cfg.step, rng).value;
    });
    const auto i = mc(cfg.samples, cfg.seed, workers, [&](RngStream& rng) {
      const PotentialPath path = simulate_path(cfg.spec, cfg.r, cfg.step, rng);
      return additive_functional_from_path(path, rng);
    });
    add_upper(t, "signed_ks", ks_signed_plus(h, i),
              2.0 * std::sqrt(2.0 / double(cfg.samples)),
              "H stochastically dominates I");
    t.add_info("mean_gap", sample_mean(h) - sample_mean(i));
  } else if (cfg.kind == "tail-probe") {
    std::vector<double> grid;
    for (int k = 1; k <= 16; ++k)
      grid.push_back(cfg.horizon * double(k) / 16.0);
    const DecayReport rep = hitting_time_tail_probe(
        cfg.spec, cfg.z0, cfg.level, grid, cfg.samples, cfg.step, cfg.seed);
    t.add_info("decay_rate", -rep.slope);
    t.add_checked("log_survival_r2", rep.r_squared, 1.0, 0.05,
                  "exponential crossing-time tail");
  } else {
    throw std::invalid_argument(
        "unknown experiment kind '" + cfg.kind +
        "'; kinds: K-estimate, Z-infinity-tail, moment-check, "
        "theorem-verify, dufresne, cross-validate, tail-probe");
  }
  return t;
}

}  // namespace levydiff
