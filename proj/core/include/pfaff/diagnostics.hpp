#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pfaff/series_linalg.hpp"
#include "pfaff/solver.hpp"

namespace pfaff {

// Per-degree maxima M_d = max_{|k| = d, a} |c_k[a]| for d = 1..N, as long
// double (64-bit significand on x86). Logs are kept separately so that huge
// or tiny values lose nothing to overflow.
struct GrowthProfile {
  std::vector<long double> max_abs;
  std::vector<long double> log_max;  // -inf where M_d == 0
  std::vector<bool> zero_degree;

  std::size_t size() const noexcept { return max_abs.size(); }
  // Every M_d is zero.
  bool degenerate() const;
  std::size_t nonzero_count() const;
};

GrowthProfile degree_profile(const SeriesVec& phi);
GrowthProfile degree_profile(const FormalSolution& solution);

// Profile from given M_1..M_N or log M_1..log M_N (synthetic data, tests).
GrowthProfile profile_from_values(const std::vector<long double>& values);
GrowthProfile profile_from_logs(const std::vector<long double>& logs);

// log M_d ~ logC + d*logA + s*log(d!) over nonzero degrees.
struct GevreyFit {
  long double s = 0;
  long double logA = 0;
  long double logC = 0;
  long double r2 = 0;
  std::vector<int> degrees_used;
  std::vector<int> degrees_excluded;
};

inline constexpr std::size_t kMinFitPoints = 5;

// Throws InsufficientData with fewer than kMinFitPoints nonzero degrees.
GevreyFit gevrey_fit(const GrowthProfile& profile);

// "factorial-type growth: likely divergent" for s >= 0.5,
// "geometric growth: likely convergent" for |s| <= 0.25, else inconclusive.
std::string growth_verdict(const GevreyFit& fit);

struct Ray {
  enum class Kind { Axis, Diagonal };
  Kind kind = Kind::Diagonal;
  std::size_t axis = 1;  // 1-based, for Kind::Axis

  static Ray along_axis(std::size_t i) { return {Kind::Axis, i}; }
  static Ray diagonal() { return {Kind::Diagonal, 1}; }
  // "axis_2", "diagonal"
  static Ray parse(const std::string& text);
  std::string to_string() const;
};

// Coefficients a_1..a_N of phi(t*v) for the ray's direction v, max |.| over
// components.
std::vector<Rat> ray_coefficients(const SeriesVec& phi, const Ray& ray);

struct RadiusEstimate {
  long double radius = 0;  // +inf when the tail window is all zero
  std::vector<int> degrees_used;
};

// 1 / max |a_d|^{1/d} over the last third of degrees 1..N. Throws
// InsufficientData when fewer than kMinFitPoints a_d are nonzero.
RadiusEstimate radius_estimate(const SeriesVec& phi, const Ray& ray);
RadiusEstimate radius_estimate(const std::vector<Rat>& coefficients);

// Locale-independent shortest round-trip text.
std::string format_float(long double value);

// "degree,max_abs_coeff" then one row per degree.
void write_profile_csv(std::ostream& out, const GrowthProfile& profile);

}  // namespace pfaff
