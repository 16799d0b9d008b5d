#include "mincone/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mincone {

namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6d696e63u};
  return std::mt19937_64(seq);
}

bool use_exact(const CubicForm& u, const IdentityOptions& opt) {
  switch (opt.mode) {
    case Mode::Exact: return true;
    case Mode::Random: return false;
    case Mode::Auto: break;
  }
  return u.dim() <= opt.exact_max_dim;
}

void check_random_options(const IdentityOptions& opt, int degree) {
  if (opt.trials < 1) throw InvalidInput("random mode needs at least one trial");
  if (opt.bound <= degree) throw InvalidInput("random mode needs bound > degree");
}

// Values of u, grad u, L_x = D^2u(x) and |x|^2 at an exact point.
struct PointData {
  Surd u;
  SurdVec g;
  SurdMat H;
  Surd r2;
};

PointData point_data(const MetrisedAlgebra& A, const SurdVec& x) {
  PointData d;
  const SurdVec xx = A.multiply(x, x);
  d.g.resize(xx.size());
  for (std::size_t i = 0; i < xx.size(); ++i) d.g[i] = xx[i] * Surd(Rational(1, 2));
  d.u = inner(xx, x) * Surd(Rational(1, 6));
  d.H = A.mult_operator(x);
  d.r2 = inner(x, x);
  return d;
}

SurdVec to_surd(const std::vector<long>& p) {
  SurdVec x;
  x.reserve(p.size());
  for (long v : p) x.emplace_back(v);
  return x;
}

SurdVec mat_vec(const SurdMat& M, const SurdVec& v) {
  SurdVec out(v.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!M[i][j].is_zero() && !v[j].is_zero()) out[i] += M[i][j] * v[j];
    }
  }
  return out;
}

Surd trace_of(const SurdMat& M) {
  Surd t(0);
  for (std::size_t i = 0; i < M.size(); ++i) t += M[i][i];
  return t;
}

SurdMat mat_mul(const SurdMat& X, const SurdMat& Y) {
  const std::size_t n = X.size();
  SurdMat Z(n, SurdVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (X[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!Y[k][j].is_zero()) Z[i][j] += X[i][k] * Y[k][j];
      }
    }
  }
  return Z;
}

struct Sides {
  Surd lhs;
  Surd rhs;
};

// Randomized proportionality test lhs(x) = k rhs(x). One calibration point
// fixes k, then `trials` fresh points must all satisfy the identity.
IdentityResult random_proportionality(const std::string& name, const CubicForm& u, int degree,
                                      const IdentityOptions& opt,
                                      const std::function<Sides(const PointData&)>& sides) {
  check_random_options(opt, degree);
  const MetrisedAlgebra A(u);
  IdentityResult res;
  res.check = name;
  res.mode = "random";
  std::optional<Surd> k;
  for (std::uint64_t s = 0; s < 8 && !k; ++s) {
    const Sides sd = sides(point_data(A, to_surd(random_integer_point(u.dim(), opt.bound, opt.seed, s))));
    if (!sd.rhs.is_zero()) k = sd.lhs / sd.rhs;
  }
  if (!k) {
    res.detail = "right-hand side vanished at every calibration point";
    return res;
  }
  for (int t = 0; t < opt.trials; ++t) {
    const auto p = random_integer_point(u.dim(), opt.bound, opt.seed, 1000 + t);
    const Sides sd = sides(point_data(A, to_surd(p)));
    if (sd.lhs != *k * sd.rhs) {
      res.detail = "identity fails at a sampled point";
      return res;
    }
  }
  res.pass = true;
  res.constant = k;
  res.error_bound = std::pow(static_cast<double>(degree) / static_cast<double>(opt.bound), opt.trials);
  return res;
}

IdentityResult exact_proportionality(const std::string& name, const Poly& lhs, const Poly& rhs) {
  IdentityResult res;
  res.check = name;
  res.mode = "exact";
  res.constant = proportionality(lhs, rhs);
  res.pass = res.constant.has_value();
  if (!res.pass) res.detail = "not proportional";
  return res;
}

std::vector<Poly> hessian_times(const std::vector<std::vector<Poly>>& H, const std::vector<Poly>& g) {
  std::vector<Poly> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!H[i][j].is_zero() && !g[j].is_zero()) out[i] += H[i][j] * g[j];
    }
  }
  return out;
}

Poly dot(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  Poly s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

bool exact_zero(const Poly& p) { return p.is_zero(); }

std::vector<long> random_integer_point(int n, long bound, std::uint64_t seed, std::uint64_t stream) {
  auto rng = stream_rng(seed, stream);
  std::uniform_int_distribution<long> dist(0, bound - 1);
  std::vector<long> p(n);
  for (auto& v : p) v = dist(rng);
  return p;
}

ZeroTest random_zero(const Poly& p, int nvars, int trials, long bound, std::uint64_t seed) {
  const int deg = std::max(p.degree(), 0);
  if (bound <= deg) throw InvalidInput("random_zero: bound must exceed the degree");
  if (trials < 1) throw InvalidInput("random_zero: trials must be >= 1");
  nvars = std::max(nvars, p.var_bound());
  ZeroTest out;
  for (int t = 0; t < trials; ++t) {
    const auto pt = random_integer_point(nvars, bound, seed, t);
    if (!p.evaluate(to_surd(pt)).is_zero()) {
      out.zero = false;
      out.witness = pt;
      return out;
    }
  }
  out.error_bound = std::pow(static_cast<double>(deg) / static_cast<double>(bound), trials);
  return out;
}

std::optional<Surd> proportionality(const Poly& lhs, const Poly& rhs) {
  if (rhs.is_zero()) {
    if (lhs.is_zero()) return Surd(0);
    return std::nullopt;
  }
  const auto& [key, coeff] = *rhs.terms().begin();
  const Surd k = lhs.coefficient(key) / coeff;
  Poly diff = lhs;
  diff -= rhs * k;
  if (!diff.is_zero()) return std::nullopt;
  return k;
}

Poly squared_radius(int n) {
  Poly r2;
  for (int i = 0; i < n; ++i) r2 += Poly::monomial({i, i}, Surd(1));
  return r2;
}

bool check_harmonic(const CubicForm& u) { return u.laplacian().is_zero(); }

IdentityResult harmonic_result(const CubicForm& u) {
  IdentityResult r;
  r.check = "harmonic";
  r.mode = "exact";
  r.pass = check_harmonic(u);
  r.constant = Surd(0);
  if (!r.pass) {
    r.constant.reset();
    r.detail = "Laplacian = " + u.laplacian().str();
  }
  return r;
}

Poly radial_lhs(const CubicForm& u) {
  const auto g = u.gradient();
  const auto H = u.hessian();
  // (1/2) Du . D|Du|^2 = Du^T D^2u Du
  Poly lhs = dot(g, g) * u.laplacian();
  lhs -= dot(g, hessian_times(H, g));
  return lhs;
}

IdentityResult check_radial(const CubicForm& u, const IdentityOptions& opt) {
  if (u.is_zero()) throw InvalidInput("check_radial: zero form");
  if (use_exact(u, opt)) {
    return exact_proportionality("radial", radial_lhs(u), squared_radius(u.dim()) * u.to_poly());
  }
  return random_proportionality("radial", u, 5, opt, [](const PointData& d) {
    Surd trH = trace_of(d.H);
    const SurdVec Hg = mat_vec(d.H, d.g);
    return Sides{inner(d.g, d.g) * trH - inner(d.g, Hg), d.r2 * d.u};
  });
}

IdentityResult check_eiconal(const CubicForm& u, const IdentityOptions& opt) {
  IdentityResult r;
  if (u.is_zero()) {
    r.check = "eiconal";
    r.mode = "exact";
    r.detail = "zero form is degenerate (kappa = 0)";
    return r;
  }
  if (use_exact(u, opt)) {
    const auto g = u.gradient();
    const Poly r2 = squared_radius(u.dim());
    r = exact_proportionality("eiconal", dot(g, g), r2 * r2);
  } else {
    r = random_proportionality("eiconal", u, 4, opt, [](const PointData& d) {
      return Sides{inner(d.g, d.g), d.r2 * d.r2};
    });
  }
  if (r.pass && r.constant->sign() <= 0) {
    r.pass = false;
    r.constant.reset();
    r.detail = "kappa is not positive";
  }
  return r;
}

IdentityResult trace_identity_quadratic(const CubicForm& u, const IdentityOptions& opt) {
  if (use_exact(u, opt)) {
    const auto H = u.hessian();
    Poly t;
    for (const auto& row : H) t += dot(row, row);
    return exact_proportionality("trace2", t, squared_radius(u.dim()));
  }
  return random_proportionality("trace2", u, 2, opt, [](const PointData& d) {
    Surd t(0);
    for (const auto& row : d.H) t += inner(row, row);
    return Sides{t, d.r2};
  });
}

IdentityResult trace_identity_cubic(const CubicForm& u, const IdentityOptions& opt) {
  if (use_exact(u, opt)) {
    const auto H = u.hessian();
    const std::size_t n = H.size();
    Poly t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (H[i][j].is_zero()) continue;
        Poly h2;  // (H^2)_{ji}
        for (std::size_t k = 0; k < n; ++k) {
          if (!H[j][k].is_zero() && !H[k][i].is_zero()) h2 += H[j][k] * H[k][i];
        }
        if (!h2.is_zero()) t += H[i][j] * h2;
      }
    }
    return exact_proportionality("trace3", t, u.to_poly());
  }
  return random_proportionality("trace3", u, 3, opt, [](const PointData& d) {
    return Sides{trace_of(mat_mul(mat_mul(d.H, d.H), d.H)), d.u};
  });
}

ClassificationRecord classify(const CubicForm& u, const IdentityOptions& opt) {
  ClassificationRecord rec;
  const MetrisedAlgebra A(u);
  rec.multiplication_rank = A.multiplication_rank();
  rec.is_harmonic = check_harmonic(u);
  rec.mode = use_exact(u, opt) ? "exact" : "random";
  if (u.is_zero()) {
    rec.label = "not-eigencubic";
    return rec;
  }
  const IdentityResult radial = check_radial(u, opt);
  const IdentityResult quad = trace_identity_quadratic(u, opt);
  const IdentityResult cubic = trace_identity_cubic(u, opt);
  rec.error_bound = std::max({radial.error_bound, quad.error_bound, cubic.error_bound});
  if (radial.pass) rec.radial_theta = radial.constant;
  if (quad.pass) rec.quad_trace = quad.constant;
  if (cubic.pass) rec.cubic_trace = cubic.constant;
  rec.is_trivial = rec.multiplication_rank <= 1;
  if (!rec.radial_theta) {
    rec.label = "not-eigencubic";
  } else if (rec.is_trivial) {
    rec.label = "trivial";
  } else if (rec.quad_trace) {
    rec.label = "exceptional-or-mutant";
  } else {
    rec.label = "clifford-type";
  }
  return rec;
}

namespace {

nlohmann::ordered_json optional_surd(const std::optional<Surd>& s) {
  return s ? nlohmann::ordered_json(s->str()) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json classification_to_json(const ClassificationRecord& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["is_trivial"] = r.is_trivial;
  j["is_harmonic"] = r.is_harmonic;
  j["radial_theta"] = optional_surd(r.radial_theta);
  j["quad_trace"] = optional_surd(r.quad_trace);
  j["cubic_trace"] = optional_surd(r.cubic_trace);
  j["multiplication_rank"] = r.multiplication_rank;
  j["mode"] = r.mode;
  j["error_bound"] = r.error_bound;
  return j;
}

nlohmann::ordered_json identity_to_json(const IdentityResult& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["constant"] = optional_surd(r.constant);
  j["mode"] = r.mode;
  j["error_bound"] = r.error_bound;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

namespace {

double curvature_at(const MetrisedAlgebra& A, const Eigen::VectorXd& x) {
  const Eigen::VectorXd g = 0.5 * A.multiply(x, x);
  const Eigen::MatrixXd L = A.mult_operator(x);
  const double g2 = g.squaredNorm();
  if (g2 == 0.0) throw InvalidInput("mean_curvature: gradient vanishes");
  return (g2 * L.trace() - g.dot(L * g)) / std::pow(g2, 1.5);
}

}  // namespace

double mean_curvature(const CubicForm& u, const std::vector<double>& x) {
  const MetrisedAlgebra A(u);
  return curvature_at(A, Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())));
}

ConeSample sample_cone(const CubicForm& u, int count, std::uint64_t seed, double threshold,
                       int max_segments) {
  ConeSample out;
  if (u.is_zero()) throw InvalidInput("sample_cone: zero form");
  const MetrisedAlgebra A(u);
  // Threshold applies to u / scale; curvature itself is scale invariant.
  const double scale = u.max_abs_coefficient();
  const int n = u.dim();
  auto f = [&](const Eigen::VectorXd& x) { return A.multiply(x, x).dot(x) / 6.0; };
  for (int k = 0; k < max_segments && static_cast<int>(out.points.size()) < count; ++k) {
    ++out.segments;
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd a(n), b(n);
    for (int i = 0; i < n; ++i) a[i] = normal(rng);
    for (int i = 0; i < n; ++i) b[i] = normal(rng);
    a.normalize();
    b.normalize();
    double fa = f(a), fb = f(b);
    if (fa == 0.0 || fb == 0.0 || (fa > 0) == (fb > 0)) continue;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f((1 - mid) * a + mid * b);
      if ((fm > 0) == (fa > 0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    Eigen::VectorXd p = (1 - 0.5 * (lo + hi)) * a + 0.5 * (lo + hi) * b;
    p.normalize();
    if ((0.5 * A.multiply(p, p)).norm() / scale < threshold) {
      ++out.rejected;
      continue;
    }
    const double h = curvature_at(A, p);
    out.points.emplace_back(p.data(), p.data() + n);
    out.curvatures.push_back(h);
    out.max_abs_curvature = std::max(out.max_abs_curvature, std::abs(h));
  }
  return out;
}

double eiconal_normalized_residual(const CubicForm& u, double kappa, int points,
                                   std::uint64_t seed) {
  if (!(kappa > 0)) throw InvalidInput("eiconal_normalized_residual: kappa must be positive");
  const MetrisedAlgebra A(u);
  const double s = 3.0 / std::sqrt(kappa);
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    auto rng = stream_rng(seed, static_cast<std::uint64_t>(k));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd x(u.dim());
    for (int i = 0; i < u.dim(); ++i) x[i] = normal(rng);
    x.normalize();
    const Eigen::VectorXd g = 0.5 * s * A.multiply(x, x);
    worst = std::max(worst, std::abs(g.squaredNorm() - 9.0) / 9.0);
  }
  return worst;
}

SurdMat rational_rotation(int n, std::uint64_t seed) {
  auto rng = stream_rng(seed, 0xC0FFEEu);
  std::uniform_int_distribution<long> dist(-3, 3);
  std::vector<std::vector<Rational>> S(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      S[i][j] = dist(rng);
      S[j][i] = -S[i][j];
    }
  }
  // Gauss-Jordan inverse of I + S (always invertible: S is skew).
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = S[i][j] + (i == j ? 1 : 0);
    M[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (sgn(M[piv][col]) == 0) ++piv;
    std::swap(M[piv], M[col]);
    const Rational inv = 1 / M[col][col];
    for (auto& v : M[col]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || sgn(M[r][col]) == 0) continue;
      const Rational f = M[r][col];
      for (int c = 0; c < 2 * n; ++c) M[r][c] -= f * M[col][c];
    }
  }
  SurdMat R(n, SurdVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < n; ++k) {
        const Rational imsk = (i == k ? 1 : 0) - S[i][k];
        s += imsk * M[k][n + j];
      }
      R[i][j] = Surd(s);
    }
  }
  return R;
}

}  // namespace mincone
