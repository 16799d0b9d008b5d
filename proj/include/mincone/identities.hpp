#pragma once

// Exact and randomized identity tests for cubic forms:
//   radial   |Du|^2 Lap u - (1/2) Du . D|Du|^2 = theta |x|^2 u
//   eiconal  |Du|^2 = kappa |x|^4
//   trace2   trace (D^2u)^2 = c |x|^2
//   trace3   trace (D^2u)^3 = a u
//   harmonic Lap u = 0

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mincone/algebra.hpp"

namespace mincone {

enum class Mode { Auto, Exact, Random };

struct IdentityOptions {
  Mode mode = Mode::Auto;
  int trials = 20;
  long bound = 1000000;
  std::uint64_t seed = 1;
  /// Auto mode expands exactly up to this dimension.
  int exact_max_dim = 15;
};

struct IdentityResult {
  std::string check;
  bool pass = false;
  std::optional<Surd> constant;
  std::string mode;  // "exact" or "random"
  /// Probability that a false identity passed; 0 in exact mode.
  double error_bound = 0.0;
  std::string detail;
};

bool exact_zero(const Poly& p);

struct ZeroTest {
  bool zero = true;
  double error_bound = 0.0;
  /// First point where p did not vanish.
  std::vector<long> witness;
};

/// Schwartz-Zippel test at uniform integer points of [0, bound)^nvars.
/// Requires bound > degree(p).
ZeroTest random_zero(const Poly& p, int nvars, int trials, long bound, std::uint64_t seed);

/// Uniform integer point of [0, bound)^n from stream (seed, stream).
std::vector<long> random_integer_point(int n, long bound, std::uint64_t seed, std::uint64_t stream);

/// Solves lhs = k * rhs by reading k off one monomial of rhs and verifying
/// globally. Since k enters linearly and rhs != 0, a solution is unique when
/// it exists, so no tie-breaking is needed.
std::optional<Surd> proportionality(const Poly& lhs, const Poly& rhs);

bool check_harmonic(const CubicForm& u);
IdentityResult check_radial(const CubicForm& u, const IdentityOptions& opt = {});
IdentityResult check_eiconal(const CubicForm& u, const IdentityOptions& opt = {});
IdentityResult trace_identity_quadratic(const CubicForm& u, const IdentityOptions& opt = {});
IdentityResult trace_identity_cubic(const CubicForm& u, const IdentityOptions& opt = {});
IdentityResult harmonic_result(const CubicForm& u);

/// Residual polynomials (exact mode building blocks).
Poly radial_lhs(const CubicForm& u);
Poly squared_radius(int n);

struct ClassificationRecord {
  bool is_trivial = false;
  bool is_harmonic = false;
  std::optional<Surd> radial_theta;
  std::optional<Surd> quad_trace;
  std::optional<Surd> cubic_trace;
  int multiplication_rank = 0;
  std::string label;
  std::string mode;
  double error_bound = 0.0;
};

ClassificationRecord classify(const CubicForm& u, const IdentityOptions& opt = {});
nlohmann::ordered_json classification_to_json(const ClassificationRecord& r);
nlohmann::ordered_json identity_to_json(const IdentityResult& r);

/// H = (|Du|^2 Lap u - Du^T D^2u Du) / |Du|^3, in floating point.
double mean_curvature(const CubicForm& u, const std::vector<double>& x);

struct ConeSample {
  std::vector<std::vector<double>> points;
  std::vector<double> curvatures;
  double max_abs_curvature = 0.0;
  int rejected = 0;
  int segments = 0;
};

/// Finds count regular points of {u = 0} on the unit sphere. The form is first
/// scaled to unit largest coefficient; points with |Du| < threshold there
/// are rejected and counted. Segment k draws from stream (seed, k).
ConeSample sample_cone(const CubicForm& u, int count, std::uint64_t seed, double threshold = 0.1,
                       int max_segments = 200000);

/// Max over `points` random unit vectors of | |D(su)|^2 - 9|x|^4 | / 9 with
/// s = 3 / sqrt(kappa).
double eiconal_normalized_residual(const CubicForm& u, double kappa, int points,
                                   std::uint64_t seed);

/// Exact orthogonal matrix (I - S)(I + S)^{-1} for a random integer skew S.
SurdMat rational_rotation(int n, std::uint64_t seed);

}  // namespace mincone
