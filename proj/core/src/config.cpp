#include "levydiff/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace levydiff {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_key(const std::string& section, const std::string& key) {
  throw std::invalid_argument("config: unknown key '" + key + "' in [" +
                              section + "]");
}

}  // namespace

void apply_config_line(ExperimentConfig& cfg, const std::string& section,
                       const std::string& key, const std::string& value) {
  auto num = [&]() { return std::stod(value); };
  if (section == "potential") {
    // Family parameters are stored directly; the family tag controls
    // which closed forms apply downstream.
    if (key == "family") {
      if (value == "brownian")
        cfg.spec.family = Family::DriftedBrownian;
      else if (value == "drift_cp")
        cfg.spec.family = Family::DriftMinusCompoundPoisson;
      else if (value == "mixed")
        cfg.spec.family = Family::Mixed;
      else
        throw std::invalid_argument("config: unknown family '" + value + "'");
    } else if (key == "delta") {
      cfg.spec = PotentialSpec::drifted_brownian(num());
    } else if (key == "sigma") {
      cfg.spec.sigma = num();
    } else if (key == "drift" || key == "c" || key == "d") {
      cfg.spec.drift = num();
      if (cfg.spec.family == Family::DriftMinusCompoundPoisson)
        cfg.spec.sigma = 0.0;
    } else if (key == "a") {
      cfg.spec.jump_intensity = num();
    } else if (key == "b") {
      cfg.spec.jump_rate = num();
    } else {
      bad_key(section, key);
    }
  } else if (section == "run") {
    if (key == "kind") cfg.kind = value;
    else if (key == "r") cfg.r = num();
    else if (key == "horizon") cfg.horizon = num();
    else if (key == "step") cfg.step = num();
    else if (key == "epsilon") cfg.epsilon = num();
    else if (key == "samples") cfg.samples = static_cast<std::size_t>(std::stoull(value));
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "z0") cfg.z0 = num();
    else if (key == "level") cfg.level = num();
    else if (key == "out") cfg.out = value;
    else if (key == "format") cfg.format = value;
    else bad_key(section, key);
  } else {
    throw std::invalid_argument("config: unknown section [" + section + "]");
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  ExperimentConfig cfg;
  std::string line, section;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: bad section header at line " +
                                    std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " +
                                  std::to_string(lineno));
    apply_config_line(cfg, section, trim(line.substr(0, eq)),
                      trim(line.substr(eq + 1)));
  }
  return cfg;
}

int effective_workers(const ExperimentConfig& cfg) {
  if (const char* env = std::getenv("LEVYDIFF_WORKERS"))
    return std::atoi(env);
  return cfg.workers;
}

}  // namespace levydiff
