#include "levydiff/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levydiff {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

bool ResultTable::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

void ResultTable::add_checked(const std::string& name, double value,
                              double target, double tolerance,
                              const std::string& provenance) {
  ResultRow row;
  row.name = name;
  row.value = value;
  row.ci_half_width = tolerance;
  row.has_target = true;
  row.target = target;
  row.provenance = provenance;
  row.pass = std::abs(value - target) <= tolerance;
  rows.push_back(std::move(row));
}

void ResultTable::add_info(const std::string& name, double value) {
  ResultRow row;
  row.name = name;
  row.value = value;
  rows.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  os << "statistic,value,ci,target,provenance,pass\n";
  for (const auto& r : rows) {
    os << r.name << ',' << fmt(r.value) << ',' << fmt(r.ci_half_width) << ','
       << (r.has_target ? fmt(r.target) : std::string()) << ','
       << r.provenance << ',' << (r.pass ? "1" : "0") << '\n';
  }
  return os.str();
}

std::string ResultTable::to_json() const {
  std::ostringstream os;
  os << "{\n"
     << "  \"kind\": \"" << json_escape(kind) << "\",\n"
     << "  \"seed\": " << seed << ",\n"
     << "  \"samples\": " << samples << ",\n"
     << "  \"step\": " << fmt(step) << ",\n"
     << "  \"epsilon\": " << fmt(epsilon) << ",\n"
     << "  \"rows\": [\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "    {\"statistic\": \"" << json_escape(r.name) << "\", \"value\": "
       << fmt(r.value) << ", \"ci\": " << fmt(r.ci_half_width);
    if (r.has_target)
      os << ", \"target\": " << fmt(r.target) << ", \"provenance\": \""
         << json_escape(r.provenance) << "\"";
    os << ", \"pass\": " << (r.pass ? "true" : "false") << "}"
       << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

void write_results(const ResultTable& table, const std::string& destination,
                   const std::string& format) {
  std::ofstream out(destination);
  if (!out) throw std::runtime_error("write_results: cannot open " + destination);
  if (format == "csv")
    out << table.to_csv();
  else if (format == "json")
    out << table.to_json();
  else
    throw std::invalid_argument("write_results: unknown format " + format);
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<double> parallel_map(std::size_t n, int workers,
                                 const std::function<double(std::size_t)>& fn) {
  const int w = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(resolve_workers(workers)),
                            std::max<std::size_t>(n, 1)));
  std::vector<double> out(n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  threads.reserve(w);
  for (int k = 0; k < w; ++k) {
    threads.emplace_back([&, k]() {
      try {
        for (std::size_t i = k; i < n; i += w) out[i] = fn(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf,
                   std::size_t max_evals) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  const std::size_t stride = std::max<std::size_t>(1, n / max_evals);
  double d = 0.0;
  for (std::size_t i = 0; i < n; i += stride) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  // right edge
  const double f_last = cdf(samples[n - 1]);
  d = std::max(d, 1.0 - f_last);
  return d;
}

namespace {

double two_sample_sup(const std::vector<double>& a,
                      const std::vector<double>& b, bool signed_plus) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0 || m == 0) throw std::invalid_argument("ks: empty sample");
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < n && j < m) {
    const double x = std::min(a[i], b[j]);
    while (i < n && a[i] <= x) ++i;
    while (j < m && b[j] <= x) ++j;
    const double diff = static_cast<double>(i) / n - static_cast<double>(j) / m;
    d = std::max(d, signed_plus ? diff : std::abs(diff));
  }
  return d;
}

}  // namespace

double ks_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return two_sample_sup(a, b, false);
}

double ks_signed_plus(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return two_sample_sup(a, b, true);
}

double hill_tail_index(std::vector<double> samples, double top_fraction) {
  if (top_fraction <= 0.0 || top_fraction >= 1.0)
    throw std::invalid_argument("hill_tail_index: top_fraction in (0,1)");
  std::sort(samples.begin(), samples.end(), std::greater<double>());
  const std::size_t k = std::max<std::size_t>(
      10, static_cast<std::size_t>(top_fraction * samples.size()));
  if (k + 1 > samples.size() || samples[k] <= 0.0)
    throw std::invalid_argument("hill_tail_index: not enough positive mass");
  if (samples[0] == samples[k])
    throw std::invalid_argument("hill_tail_index: degenerate tail");
  double acc = 0.0;
  const double log_thresh = std::log(samples[k]);
  for (std::size_t i = 0; i < k; ++i) acc += std::log(samples[i]) - log_thresh;
  return static_cast<double>(k) / acc;
}

double sample_mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v) {
  const double m = sample_mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

double sample_quantile(std::vector<double> v, double q) {
  if (v.empty()) throw std::invalid_argument("sample_quantile: empty");
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - static_cast<double>(lo);
  if (lo + 1 >= v.size()) return v.back();
  return v[lo] * (1.0 - frac) + v[lo + 1] * frac;
}

MomentCheck moment_check(const std::vector<double>& samples, double target,
                         double tolerance) {
  if (samples.empty()) throw std::invalid_argument("moment_check: empty sample");
  MomentCheck mc;
  mc.mean = sample_mean(samples);
  mc.ci_half_width =
      samples.size() > 1
          ? 1.96 * std::sqrt(sample_variance(samples) /
                             static_cast<double>(samples.size()))
          : 0.0;
  mc.pass = tolerance > 0.0 ? std::abs(mc.mean - target) <= tolerance
                            : std::abs(mc.mean - target) <= mc.ci_half_width;
  return mc;
}

}  // namespace levydiff
