#include "pfaff/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "pfaff/error.hpp"

namespace pfaff {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

}  // namespace

bool GrowthProfile::degenerate() const {
  return std::all_of(zero_degree.begin(), zero_degree.end(), [](bool z) { return z; });
}

std::size_t GrowthProfile::nonzero_count() const {
  return static_cast<std::size_t>(std::count(zero_degree.begin(), zero_degree.end(), false));
}

GrowthProfile degree_profile(const SeriesVec& phi) {
  const int n = phi.trunc();
  if (n < 1) throw DomainError("degree profile needs order >= 1");
  std::vector<Rat> best(static_cast<std::size_t>(n));
  for (const auto& comp : phi) {
    for (const auto& [k, c] : comp.terms()) {
      const int d = k.total();
      if (d < 1 || d > n) continue;
      Rat a = abs(c);
      if (a > best[d - 1]) best[d - 1] = std::move(a);
    }
  }
  GrowthProfile out;
  for (const auto& b : best) {
    out.max_abs.push_back(to_long_double(b));
    out.log_max.push_back(log_abs(b));
    out.zero_degree.push_back(b == 0);
  }
  return out;
}

GrowthProfile degree_profile(const FormalSolution& solution) { return degree_profile(solution.phi); }

GrowthProfile profile_from_values(const std::vector<long double>& values) {
  GrowthProfile out;
  for (long double v : values) {
    if (!(v >= 0)) throw DomainError("profile values must be non-negative");
    out.max_abs.push_back(v);
    out.log_max.push_back(v == 0 ? kNegInf : std::log(v));
    out.zero_degree.push_back(v == 0);
  }
  return out;
}

GrowthProfile profile_from_logs(const std::vector<long double>& logs) {
  GrowthProfile out;
  for (long double l : logs) {
    const bool zero = std::isinf(l) && l < 0;
    out.max_abs.push_back(zero ? 0.0L : std::exp(l));
    out.log_max.push_back(zero ? kNegInf : l);
    out.zero_degree.push_back(zero);
  }
  return out;
}

GevreyFit gevrey_fit(const GrowthProfile& profile) {
  GevreyFit fit;
  std::vector<std::array<long double, 3>> rows;
  std::vector<long double> rhs;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const int d = static_cast<int>(i) + 1;
    if (profile.zero_degree[i]) {
      fit.degrees_excluded.push_back(d);
      continue;
    }
    fit.degrees_used.push_back(d);
    rows.push_back({1.0L, static_cast<long double>(d), std::lgamma(static_cast<long double>(d) + 1)});
    rhs.push_back(profile.log_max[i]);
  }
  if (rows.size() < kMinFitPoints) {
    throw InsufficientData("Gevrey fit needs at least " + std::to_string(kMinFitPoints) +
                           " nonzero degrees, got " + std::to_string(rows.size()));
  }

  // Modified Gram-Schmidt QR on the three columns.
  const std::size_t m = rows.size();
  std::array<std::vector<long double>, 3> q;
  std::array<std::array<long double, 3>, 3> r{};
  for (std::size_t c = 0; c < 3; ++c) {
    q[c].resize(m);
    for (std::size_t i = 0; i < m; ++i) q[c][i] = rows[i][c];
  }
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      long double dot = 0;
      for (std::size_t i = 0; i < m; ++i) dot += q[p][i] * q[c][i];
      r[p][c] = dot;
      for (std::size_t i = 0; i < m; ++i) q[c][i] -= dot * q[p][i];
    }
    long double norm = 0;
    for (long double v : q[c]) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) throw InsufficientData("Gevrey fit design matrix is rank deficient");
    r[c][c] = norm;
    for (long double& v : q[c]) v /= norm;
  }
  std::array<long double, 3> qtb{};
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < m; ++i) qtb[c] += q[c][i] * rhs[i];
  }
  std::array<long double, 3> beta{};
  for (int c = 2; c >= 0; --c) {
    long double acc = qtb[c];
    for (int k = c + 1; k < 3; ++k) acc -= r[c][k] * beta[k];
    beta[c] = acc / r[c][c];
  }
  fit.logC = beta[0];
  fit.logA = beta[1];
  fit.s = beta[2];

  long double mean = 0;
  for (long double v : rhs) mean += v;
  mean /= static_cast<long double>(m);
  long double ss_res = 0;
  long double ss_tot = 0;
  long double ss_raw = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const long double pred = beta[0] + beta[1] * rows[i][1] + beta[2] * rows[i][2];
    ss_res += (rhs[i] - pred) * (rhs[i] - pred);
    ss_tot += (rhs[i] - mean) * (rhs[i] - mean);
    ss_raw += rhs[i] * rhs[i];
  }
  // flat data: spread below rounding noise counts as zero
  const long double noise = 64 * std::numeric_limits<long double>::epsilon() * (ss_raw + 1);
  fit.r2 = ss_tot <= noise ? 1.0L : 1.0L - ss_res / ss_tot;
  return fit;
}

std::string growth_verdict(const GevreyFit& fit) {
  if (fit.s >= 0.5L) return "factorial-type growth: likely divergent";
  if (std::fabs(fit.s) <= 0.25L) return "geometric growth: likely convergent";
  return "intermediate growth: inconclusive";
}

Ray Ray::parse(const std::string& text) {
  if (text == "diagonal") return diagonal();
  const std::string prefix = "axis_";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    std::size_t axis = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, axis);
    if (ec == std::errc() && ptr == last && axis >= 1) return along_axis(axis);
  }
  throw DomainError("unknown ray '" + text + "' (expected axis_<i> or diagonal)");
}

std::string Ray::to_string() const {
  return kind == Kind::Diagonal ? "diagonal" : "axis_" + std::to_string(axis);
}

std::vector<Rat> ray_coefficients(const SeriesVec& phi, const Ray& ray) {
  const int n = phi.trunc();
  if (ray.kind == Ray::Kind::Axis && (ray.axis < 1 || ray.axis > phi.vars())) {
    throw DomainError("ray axis out of range");
  }
  std::vector<Rat> out(static_cast<std::size_t>(std::max(n, 0)));
  for (const auto& comp : phi) {
    std::vector<Rat> sums(out.size());
    for (const auto& [k, c] : comp.terms()) {
      const int d = k.total();
      if (d < 1 || d > n) continue;
      if (ray.kind == Ray::Kind::Axis && k[ray.axis - 1] != d) continue;
      sums[d - 1] += c;
    }
    for (std::size_t d = 0; d < out.size(); ++d) {
      Rat a = abs(sums[d]);
      if (a > out[d]) out[d] = std::move(a);
    }
  }
  return out;
}

RadiusEstimate radius_estimate(const std::vector<Rat>& coefficients) {
  const std::size_t n = coefficients.size();
  const std::size_t nonzero = static_cast<std::size_t>(
      std::count_if(coefficients.begin(), coefficients.end(), [](const Rat& a) { return a != 0; }));
  if (nonzero < kMinFitPoints) {
    throw InsufficientData("radius estimate needs at least " + std::to_string(kMinFitPoints) +
                           " nonzero coefficients along the ray, got " + std::to_string(nonzero));
  }
  const std::size_t window = std::max<std::size_t>(1, n / 3);
  RadiusEstimate out;
  long double worst = kNegInf;
  for (std::size_t d = n - window + 1; d <= n; ++d) {
    const Rat& a = coefficients[d - 1];
    if (a == 0) continue;
    out.degrees_used.push_back(static_cast<int>(d));
    worst = std::max(worst, log_abs(a) / static_cast<long double>(d));
  }
  out.radius = std::exp(-worst);
  return out;
}

RadiusEstimate radius_estimate(const SeriesVec& phi, const Ray& ray) {
  return radius_estimate(ray_coefficients(phi, ray));
}

std::string format_float(long double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw DomainError("float formatting failed");
  return std::string(buf.data(), ptr);
}

void write_profile_csv(std::ostream& out, const GrowthProfile& profile) {
  out << "degree,max_abs_coeff\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    out << (i + 1) << ',' << format_float(profile.max_abs[i]) << '\n';
  }
}

}  // namespace pfaff
