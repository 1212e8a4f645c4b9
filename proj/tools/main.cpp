// Command-line front end: exact constants, raw-sample simulation, and
// the named verification suites.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "levydiff/config.hpp"
#include "levydiff/diffusion.hpp"
#include "levydiff/functionals.hpp"
#include "levydiff/gou.hpp"
#include "levydiff/limits.hpp"
#include "levydiff/potential.hpp"
#include "levydiff/suites.hpp"

namespace {

using namespace levydiff;

struct CliState {
  ExperimentConfig cfg;
  std::string config_path;

  // pending overrides; applied after the config file loads
  std::optional<double> delta, sigma, drift, a, b;
  std::optional<std::string> family;
};

void add_common_flags(CLI::App* cmd, CliState& st) {
  cmd->add_option("--config", st.config_path, "key/value config file");
  cmd->add_option("--seed", st.cfg.seed, "master seed");
  cmd->add_option("--samples,-n", st.cfg.samples, "sample count");
  cmd->add_option("--r", st.cfg.r, "spatial horizon / target level");
  cmd->add_option("--horizon,-t", st.cfg.horizon, "time horizon");
  cmd->add_option("--step", st.cfg.step, "grid step");
  cmd->add_option("--epsilon", st.cfg.epsilon, "tail-truncation tolerance");
  cmd->add_option("--workers", st.cfg.workers,
                  "worker threads (<=0: hardware count; env LEVYDIFF_WORKERS "
                  "overrides)");
  cmd->add_option("--z0", st.cfg.z0, "initial value of Z");
  cmd->add_option("--level", st.cfg.level, "crossing level");
  cmd->add_option("--out,-o", st.cfg.out, "output file (default: stdout)");
  cmd->add_option("--format", st.cfg.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  cmd->add_option("--family", st.family, "brownian | drift_cp | mixed");
  cmd->add_option("--delta", st.delta,
                  "drifted Brownian potential: V_x = B_x - (delta/2) x");
  cmd->add_option("--sigma", st.sigma, "Brownian coefficient");
  cmd->add_option("--drift", st.drift, "linear drift term");
  cmd->add_option("--a", st.a, "downward jump intensity");
  cmd->add_option("--b", st.b, "downward jump-size rate");
}

// Config file first, then command-line overrides on top. Flags CLI11
// left at their defaults are indistinguishable from unset, so a flag
// equal to the built-in default defers to the file value.
ExperimentConfig resolve(CliState& st) {
  ExperimentConfig cfg = st.cfg;
  if (!st.config_path.empty()) {
    cfg = load_config(st.config_path);
    const ExperimentConfig def;
    const ExperimentConfig& given = st.cfg;
    if (given.seed != def.seed) cfg.seed = given.seed;
    if (given.samples != def.samples) cfg.samples = given.samples;
    if (given.r != def.r) cfg.r = given.r;
    if (given.horizon != def.horizon) cfg.horizon = given.horizon;
    if (given.step != def.step) cfg.step = given.step;
    if (given.epsilon != def.epsilon) cfg.epsilon = given.epsilon;
    if (given.workers != def.workers) cfg.workers = given.workers;
    if (given.z0 != def.z0) cfg.z0 = given.z0;
    if (given.level != def.level) cfg.level = given.level;
    if (!given.out.empty()) cfg.out = given.out;
    if (given.format != def.format) cfg.format = given.format;
  }
  if (st.family) apply_config_line(cfg, "potential", "family", *st.family);
  if (st.delta) cfg.spec = PotentialSpec::drifted_brownian(*st.delta);
  if (st.sigma) cfg.spec.sigma = *st.sigma;
  if (st.drift) {
    cfg.spec.drift = *st.drift;
    if (cfg.spec.family == Family::DriftMinusCompoundPoisson)
      cfg.spec.sigma = 0.0;
  }
  if (st.a) cfg.spec.jump_intensity = *st.a;
  if (st.b) cfg.spec.jump_rate = *st.b;
  return cfg;
}

void emit_table(const ResultTable& table, const ExperimentConfig& cfg) {
  if (cfg.out.empty())
    std::cout << (cfg.format == "json" ? table.to_json() : table.to_csv());
  else
    write_results(table, cfg.out, cfg.format);
}

int cmd_constants(const ExperimentConfig& cfg) {
  const ValidationReport rep = validate_assumptions(cfg.spec);
  if (!rep.ok()) {
    std::cerr << "invalid potential:\n" << rep.describe();
    return 2;
  }
  const double kappa = find_kappa(cfg.spec);
  auto row = [](const char* name, double v) {
    std::printf("%-22s %.12g\n", name, v);
  };
  row("kappa", kappa);
  row("Phi(1)", laplace_exponent(cfg.spec, 1.0));
  row("Phi(2)", laplace_exponent(cfg.spec, 2.0));
  row("Phi'(kappa)", phi_prime(cfg.spec, kappa));
  if (kappa > 1.0) row("m", -2.0 / laplace_exponent(cfg.spec, 1.0));
  std::optional<double> K = exact_K(cfg.spec);
  if (!K) {
    RngStream rng(cfg.seed);
    K = estimate_K(cfg.spec, std::max<std::size_t>(cfg.samples, 1000),
                   cfg.epsilon, rng, cfg.step)
            .value;
    row("K (Monte Carlo)", *K);
  } else {
    row("K (exact)", *K);
  }
  const LimitRegime regime = theorem_constants(cfg.spec, K);
  std::printf("%-22s %c\n", "case", regime.case_tag);
  row("law scale", regime.law.scale);
  if (regime.law.kind == LimitLaw::Kind::Stable) row("alpha", regime.law.alpha);
  if (regime.centering != LimitRegime::Centering::None)
    row("centering coefficient", regime.centering_coeff);
  if (kappa < 1.0) row("corollary constant", corollary_constant(cfg.spec, *K));
  return 0;
}

int cmd_simulate(const ExperimentConfig& cfg, const std::string& kind) {
  const std::string out = cfg.out.empty() ? ("levydiff_" + kind + ".csv")
                                          : cfg.out;
  RngStream rng(cfg.seed);
  if (kind == "path") {
    write_path_csv(simulate_path(cfg.spec, cfg.r, cfg.step, rng), out);
  } else if (kind == "zpath") {
    write_zpath_csv(simulate_Z(cfg.spec, cfg.z0, cfg.horizon, cfg.step, rng),
                    out);
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot open " << out << "\n";
      return 2;
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "# kind=%s seed=%llu samples=%zu step=%.17g epsilon=%.17g "
                  "r=%.17g\n",
                  kind.c_str(), (unsigned long long)cfg.seed, cfg.samples,
                  cfg.step, cfg.epsilon, cfg.r);
    f << buf;
    const int workers = effective_workers(cfg);
    auto emit = [&](const std::function<double(RngStream&)>& draw,
                    const char* header) {
      f << header << "\n";
      const auto vals =
          parallel_map(cfg.samples, workers, [&](std::size_t i) {
            RngStream r = RngStream::substream(cfg.seed, i);
            return draw(r);
          });
      for (double v : vals) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        f << buf;
      }
    };
    if (kind == "ainf") {
      // value plus the deterministic truncation bound, per draw
      f << "value,truncation_horizon,error_bound\n";
      for (std::size_t i = 0; i < cfg.samples; ++i) {
        RngStream r = RngStream::substream(cfg.seed, i);
        const FunctionalSample s =
            sample_A_infinity(cfg.spec, cfg.epsilon, r, cfg.step);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", s.value,
                      s.truncation_horizon, s.error_bound);
        f << buf;
      }
    } else if (kind == "zinf") {
      emit([&](RngStream& r) {
        return sample_Z_infinity(cfg.spec, cfg.epsilon, r, cfg.step);
      }, "value");
    } else if (kind == "ir") {
      emit([&](RngStream& r) {
        return additive_functional_I(cfg.spec, cfg.r, cfg.step, r).value;
      }, "value");
    } else if (kind == "hr") {
      emit([&](RngStream& r) {
        return simulate_H_direct(cfg.spec, cfg.r, cfg.step, r).value;
      }, "value");
    } else {
      std::cerr << "unknown simulate kind '" << kind
                << "'; kinds: path zpath ainf zinf ir hr\n";
      return 2;
    }
  }
  std::cout << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Diffusion in a spectrally negative Levy potential: exponential "
      "functionals, the exponential-clock process Z, hitting-time "
      "functionals and their limit laws"};
  app.require_subcommand(1);

  CliState st;

  auto* constants = app.add_subcommand(
      "constants",
      "print kappa, Phi values, m, K and the limit-regime constants");
  add_common_flags(constants, st);

  std::string sim_kind = "path";
  auto* simulate = app.add_subcommand(
      "simulate",
      "write raw samples or paths: path (potential), zpath (Z path), ainf "
      "(exponential functional), zinf (stationary Z), ir (integral of Z to "
      "r), hr (hitting-time construction)");
  simulate->add_option("kind", sim_kind, "path|zpath|ainf|zinf|ir|hr")
      ->required();
  add_common_flags(simulate, st);

  std::string suite;
  auto* verify = app.add_subcommand(
      "verify", "run a named verification suite; exit 0 iff all rows pass");
  verify->add_option("suite", suite, "suite name (see --list)")->required();
  add_common_flags(verify, st);

  auto* tail = app.add_subcommand(
      "tail", "crossing-time survival probe with log-linear decay fit");
  add_common_flags(tail, st);

  auto* crossval = app.add_subcommand(
      "cross-validate",
      "compare the direct hitting-time construction H(r) against the "
      "integral functional I(r)");
  add_common_flags(crossval, st);

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig cfg = resolve(st);
    if (constants->parsed()) return cmd_constants(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg, sim_kind);
    if (verify->parsed()) {
      const ResultTable table = run_suite(suite, cfg.seed, cfg.workers);
      emit_table(table, cfg);
      return table.all_pass() ? 0 : 1;
    }
    if (tail->parsed()) {
      cfg.kind = "tail-probe";
      const ResultTable table = run_experiment(cfg);
      emit_table(table, cfg);
      return table.all_pass() ? 0 : 1;
    }
    if (crossval->parsed()) {
      cfg.kind = "cross-validate";
      const ResultTable table = run_experiment(cfg);
      emit_table(table, cfg);
      return table.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
