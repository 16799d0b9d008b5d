#include "mincone/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <thread>

namespace mincone {

namespace {

struct IntSurd {
  mpz_class r, s;
  bool zero() const { return sgn(r) == 0 && sgn(s) == 0; }
};

// x = v / den with integer parts.
struct IntVec {
  std::vector<IntSurd> v;
  mpz_class den = 1;
  bool rational = true;
};

IntVec to_integer(const SurdVec& x) {
  IntVec out;
  for (const auto& e : x) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), e.rational_part().get_den_mpz_t());
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), e.surd_part().get_den_mpz_t());
  }
  out.v.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational& a = x[i].rational_part();
    const Rational& b = x[i].surd_part();
    out.v[i].r = out.den / a.get_den() * a.get_num();
    out.v[i].s = out.den / b.get_den() * b.get_num();
    out.rational = out.rational && sgn(b) == 0;
  }
  return out;
}

Surd from_integer(const IntSurd& x, const mpz_class& den) {
  if (x.zero()) return Surd();
  Rational a(x.r, den), b(x.s, den);
  a.canonicalize();
  b.canonicalize();
  return Surd(std::move(a), std::move(b));
}

// acc += m * x where all three live in Z[sqrt 3].
void add_product(IntSurd& acc, const mpz_class& mr, const mpz_class& ms, const IntSurd& x, bool rational) {
  mpz_addmul(acc.r.get_mpz_t(), mr.get_mpz_t(), x.r.get_mpz_t());
  if (rational) return;
  mpz_class t = ms * x.s;
  acc.r += 3 * t;
  mpz_addmul(acc.s.get_mpz_t(), mr.get_mpz_t(), x.s.get_mpz_t());
  mpz_addmul(acc.s.get_mpz_t(), ms.get_mpz_t(), x.r.get_mpz_t());
}

IntSurd mul(const IntSurd& x, const IntSurd& y, bool rational) {
  IntSurd out;
  out.r = x.r * y.r;
  if (rational) return out;
  out.r += 3 * x.s * y.s;
  out.s = x.r * y.s + x.s * y.r;
  return out;
}

}  // namespace

MetrisedAlgebra::MetrisedAlgebra(CubicForm u)
    : u_(std::move(u)), exact_(u_.expanded()), approx_(u_.expanded_double()), den_(1) {
  for (const auto& e : exact_) {
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), e.m.rational_part().get_den_mpz_t());
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), e.m.surd_part().get_den_mpz_t());
  }
  for (const auto& e : exact_) {
    const Rational& a = e.m.rational_part();
    const Rational& b = e.m.surd_part();
    scaled_.push_back({e.a, e.b, e.c, den_ / a.get_den() * a.get_num(), den_ / b.get_den() * b.get_num()});
    rational_ = rational_ && sgn(b) == 0;
  }
}

void MetrisedAlgebra::check(std::size_t size) const {
  if (static_cast<int>(size) != dim()) {
    throw InvalidInput("MetrisedAlgebra: vector has length " + std::to_string(size) +
                       ", expected " + std::to_string(dim()));
  }
}

SurdVec MetrisedAlgebra::multiply(const SurdVec& x, const SurdVec& y) const {
  check(x.size());
  check(y.size());
  const IntVec X = to_integer(x), Y = to_integer(y);
  const bool rational = rational_ && X.rational && Y.rational;
  std::vector<IntSurd> acc(dim());
  for (const auto& e : scaled_) {
    const IntSurd& xa = X.v[e.a];
    const IntSurd& yb = Y.v[e.b];
    if (xa.zero() || yb.zero()) continue;
    add_product(acc[e.c], e.ra, e.sa, mul(xa, yb, rational), rational);
  }
  const mpz_class den = den_ * X.den * Y.den;
  SurdVec out;
  out.reserve(dim());
  for (const auto& v : acc) out.push_back(from_integer(v, den));
  return out;
}

Eigen::VectorXd MetrisedAlgebra::multiply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  check(static_cast<std::size_t>(x.size()));
  check(static_cast<std::size_t>(y.size()));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  for (const auto& e : approx_) out[e.c] += e.m * x[e.a] * y[e.b];
  return out;
}

SurdMat MetrisedAlgebra::mult_operator(const SurdVec& x) const {
  check(x.size());
  const IntVec X = to_integer(x);
  const bool rational = rational_ && X.rational;
  std::vector<std::vector<IntSurd>> acc(dim(), std::vector<IntSurd>(dim()));
  for (const auto& e : scaled_) {
    const IntSurd& xa = X.v[e.a];
    if (!xa.zero()) add_product(acc[e.c][e.b], e.ra, e.sa, xa, rational);
  }
  const mpz_class den = den_ * X.den;
  SurdMat L(dim(), SurdVec(dim()));
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) L[i][j] = from_integer(acc[i][j], den);
  }
  return L;
}

Eigen::MatrixXd MetrisedAlgebra::mult_operator(const Eigen::VectorXd& x) const {
  check(static_cast<std::size_t>(x.size()));
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim(), dim());
  for (const auto& e : approx_) L(e.c, e.b) += e.m * x[e.a];
  return L;
}

Surd MetrisedAlgebra::trace_mult_operator(const SurdVec& x) const {
  check(x.size());
  Surd t(0);
  for (const auto& e : exact_) {
    if (e.b == e.c && !x[e.a].is_zero()) t += e.m * x[e.a];
  }
  return t;
}

Surd MetrisedAlgebra::generic_trace_form(const SurdVec& x, const SurdVec& y) const {
  const SurdMat Lx = mult_operator(x);
  const SurdMat Ly = mult_operator(y);
  Surd t(0);
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if (!Lx[i][j].is_zero() && !Ly[j][i].is_zero()) t += Lx[i][j] * Ly[j][i];
    }
  }
  return t;
}

namespace {

int surd_rank(SurdMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    const Surd inv = m[rank][col].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col].is_zero()) continue;
      const Surd f = m[r][col] * inv;
      for (int c = col; c < cols; ++c) {
        if (!m[rank][c].is_zero()) m[r][c] -= f * m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int MetrisedAlgebra::multiplication_rank() const {
  // span{e_a o e_b} is the column space of M[c][(a,b)] = sum of entries m
  // at (a,b,c); over an ordered field rank M = rank M M^T.
  const int n = dim();
  std::map<std::pair<int, int>, std::map<int, Surd>> columns;
  for (const auto& e : exact_) {
    auto& col = columns[{e.a, e.b}];
    col[e.c] += e.m;
  }
  SurdMat gram(n, SurdVec(n));
  for (const auto& [ab, col] : columns) {
    for (const auto& [c1, v1] : col) {
      if (v1.is_zero()) continue;
      for (const auto& [c2, v2] : col) {
        if (!v2.is_zero()) gram[c1][c2] += v1 * v2;
      }
    }
  }
  return surd_rank(std::move(gram));
}

double MetrisedAlgebra::tensor_norm() const {
  // Each expanded entry carries m = 6 T_abc summed over its own orbit; T_abc
  // for the ordered triple is m / 6 once repeated orderings are merged, so
  // recover it per distinct ordered triple.
  std::map<std::array<int, 3>, double> t;
  for (const auto& e : approx_) t[{e.a, e.b, e.c}] += e.m / 6.0;
  double s = 0.0;
  for (const auto& [k, v] : t) s += v * v;
  return std::sqrt(s);
}

Surd inner(const SurdVec& x, const SurdVec& y) {
  if (x.size() != y.size()) throw InvalidInput("inner: length mismatch");
  Surd s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  }
  return s;
}

PeirceData peirce(const MetrisedAlgebra& A, const std::vector<double>& c, double tol) {
  if (static_cast<int>(c.size()) != A.dim()) throw InvalidInput("peirce: wrong vector length");
  const Eigen::VectorXd cv = Eigen::Map<const Eigen::VectorXd>(c.data(), A.dim());
  PeirceData out;
  out.c = c;
  out.length2 = cv.squaredNorm();
  out.residual = (A.multiply(cv, cv) - cv).norm();
  if (!(out.residual < 1e-10) || cv.norm() == 0.0) {
    throw InvalidInput("peirce: not an idempotent (residual " + std::to_string(out.residual) + ")");
  }
  const Eigen::MatrixXd L = A.mult_operator(cv);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (L + L.transpose()),
                                                     Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    const double v = ev[i];
    out.spectrum.push_back(v);
    if (std::abs(v - 1.0) < tol) {
      ++out.n_one;
    } else if (std::abs(v + 1.0) < tol) {
      ++out.n1;
    } else if (std::abs(v + 0.5) < tol) {
      ++out.n2;
    } else if (std::abs(v - 0.5) < tol) {
      ++out.n3;
    } else {
      out.unbinned.push_back(v);
    }
  }
  return out;
}

namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double eval_u(const MetrisedAlgebra& A, const Eigen::VectorXd& x) {
  // u(x) = <x o x, x> / 6
  return A.multiply(x, x).dot(x) / 6.0;
}

// Pseudo-inverse Newton on F(c) = c o c - c with Jacobian 2 L_c - I.
std::optional<Eigen::VectorXd> polish(const MetrisedAlgebra& A, Eigen::VectorXd c) {
  const int n = A.dim();
  double res = (A.multiply(c, c) - c).norm();
  for (int it = 0; it < 60 && res > 1e-15 * std::max(1.0, c.norm()); ++it) {
    const Eigen::VectorXd F = A.multiply(c, c) - c;
    const Eigen::MatrixXd J = 2.0 * A.mult_operator(c) - Eigen::MatrixXd::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (J + J.transpose()));
    const Eigen::VectorXd& mu = eig.eigenvalues();
    const double cutoff = 1e-9 * std::max(1.0, mu.cwiseAbs().maxCoeff());
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < n; ++k) {
      if (std::abs(mu[k]) > cutoff) inv[k] = 1.0 / mu[k];
    }
    const Eigen::MatrixXd& V = eig.eigenvectors();
    const Eigen::VectorXd step = -(V * inv.asDiagonal() * (V.transpose() * F));
    // Damped fallback when the full step does not reduce the residual.
    double t = 1.0;
    Eigen::VectorXd trial = c + step;
    double trial_res = (A.multiply(trial, trial) - trial).norm();
    while (trial_res >= res && t > 1e-4) {
      t *= 0.5;
      trial = c + t * step;
      trial_res = (A.multiply(trial, trial) - trial).norm();
    }
    if (trial_res >= res) {
      // Last resort: one small gradient step on |F|^2 / 2.
      const Eigen::VectorXd grad = J.transpose() * F;
      if (grad.norm() == 0.0) break;
      trial = c - (res * res / grad.squaredNorm()) * 0.5 * grad;
      trial_res = (A.multiply(trial, trial) - trial).norm();
      if (trial_res >= res) break;
    }
    c = trial;
    res = trial_res;
  }
  if (!(res < 1e-12 * std::max(1.0, c.norm())) || c.norm() < 1e-9) return std::nullopt;
  return c;
}

std::optional<Eigen::VectorXd> one_restart(const MetrisedAlgebra& A, double alpha,
                                           std::uint64_t seed, int r) {
  const int n = A.dim();
  auto rng = stream_rng(seed, static_cast<std::uint64_t>(r));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = normal(rng);
  x.normalize();
  if (eval_u(A, x) < 0) x = -x;
  // Shifted power iteration climbing u on the sphere; grad u = (x o x) / 2.
  for (int it = 0; it < 20000; ++it) {
    const Eigen::VectorXd g = 0.5 * A.multiply(x, x);
    const double lambda = g.dot(x);
    const double tangential = (g - lambda * x).norm();
    if (tangential < 1e-9 * std::max(std::abs(lambda), 1e-300)) break;
    Eigen::VectorXd next = g + alpha * x;
    const double nn = next.norm();
    if (nn == 0.0) return std::nullopt;
    x = next / nn;
  }
  const double lambda = 0.5 * A.multiply(x, x).dot(x);  // = 3u(x)
  if (std::abs(lambda) < 1e-12) return std::nullopt;
  return polish(A, x / (2.0 * lambda));
}

}  // namespace

IdempotentSearch find_idempotents(const MetrisedAlgebra& A, int restarts, std::uint64_t seed,
                                  double tol, unsigned threads) {
  if (restarts < 1) throw InvalidInput("find_idempotents: restarts must be >= 1");
  IdempotentSearch out;
  out.restarts = restarts;
  if (A.form().is_zero()) {
    out.diagnostic = "zero form has no nonzero idempotents";
    return out;
  }
  const double alpha = 6.0 * A.tensor_norm();
  std::vector<std::optional<Eigen::VectorXd>> found(restarts);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(restarts));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int r = static_cast<int>(t); r < restarts; r += static_cast<int>(threads)) {
        found[r] = one_restart(A, alpha, seed, r);
      }
    });
  }
  for (auto& th : pool) th.join();

  std::vector<Eigen::VectorXd> unique;
  for (const auto& f : found) {
    if (!f) continue;
    ++out.converged;
    const bool dup = std::any_of(unique.begin(), unique.end(),
                                 [&](const Eigen::VectorXd& u) { return (u - *f).norm() < 1e-6; });
    if (!dup) unique.push_back(*f);
  }
  std::sort(unique.begin(), unique.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  for (const auto& c : unique) {
    out.idempotents.push_back(peirce(A, std::vector<double>(c.data(), c.data() + c.size()), tol));
  }
  if (out.idempotents.empty()) out.diagnostic = "no restart converged to an idempotent";
  return out;
}

HsiangSides hsiang_sides(const MetrisedAlgebra& A, const Surd& theta, const SurdVec& x) {
  const SurdVec x2 = A.multiply(x, x);
  const SurdVec x3 = A.multiply(x2, x);
  const Surd trL = A.trace_mult_operator(x);
  HsiangSides s;
  s.lhs = inner(x2, x2) * trL - inner(x2, x3);
  s.rhs = Surd(Rational(2, 3)) * theta * inner(x, x) * inner(x2, x);
  return s;
}

SurdVec random_rational_point(int n, std::uint64_t seed, std::uint64_t stream) {
  auto rng = stream_rng(seed, stream);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 9);
  SurdVec x(n);
  for (int i = 0; i < n; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    x[i] = Surd(q);
  }
  return x;
}

HsiangReport check_hsiang_identity(const MetrisedAlgebra& A, const Surd& theta, int trials,
                                   std::uint64_t seed) {
  HsiangReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const HsiangSides s = hsiang_sides(A, theta, random_rational_point(A.dim(), seed, t));
    const Surd diff = s.lhs - s.rhs;
    if (!diff.is_zero()) {
      rep.exact = false;
      rep.max_residual = std::max(rep.max_residual, std::abs(diff.to_double()));
    }
  }
  return rep;
}

}  // namespace mincone
