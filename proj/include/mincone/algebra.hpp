#pragma once

// The metrised commutative algebra V(u): <x o y, z> = u(x;y;z) on Euclidean
// R^n, so x o y = D^2u(x) y and x o x = 2 grad u(x).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mincone/cubic_form.hpp"

namespace mincone {

using SurdVec = std::vector<Surd>;
using SurdMat = std::vector<std::vector<Surd>>;

class MetrisedAlgebra {
 public:
  explicit MetrisedAlgebra(CubicForm u);

  int dim() const { return u_.dim(); }
  const CubicForm& form() const { return u_; }
  const std::vector<TensorEntry<Surd>>& entries() const { return exact_; }
  const std::vector<TensorEntry<double>>& entries_double() const { return approx_; }

  SurdVec multiply(const SurdVec& x, const SurdVec& y) const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// L_x, the matrix of y -> x o y.
  SurdMat mult_operator(const SurdVec& x) const;
  Eigen::MatrixXd mult_operator(const Eigen::VectorXd& x) const;
  /// trace L_x (equals the Laplacian of u at x).
  Surd trace_mult_operator(const SurdVec& x) const;

  /// tau(x, y) = trace(L_x L_y).
  Surd generic_trace_form(const SurdVec& x, const SurdVec& y) const;

  /// dim span{e_i o e_j}.
  int multiplication_rank() const;

  /// Frobenius norm of the fully symmetric tensor T with u = sum T_ijk x_i x_j x_k.
  double tensor_norm() const;

 private:
  // Tensor entries scaled to a common integer denominator, so exact products
  // accumulate in mpz without a gcd per term.
  struct IntEntry {
    int a, b, c;
    mpz_class ra, sa;  // rational and sqrt(3) parts of m * den_
  };

  void check(std::size_t size) const;

  CubicForm u_;
  std::vector<TensorEntry<Surd>> exact_;
  std::vector<TensorEntry<double>> approx_;
  std::vector<IntEntry> scaled_;
  mpz_class den_;
  bool rational_ = true;
};

Surd inner(const SurdVec& x, const SurdVec& y);

struct PeirceData {
  std::vector<double> c;
  double length2 = 0.0;
  double residual = 0.0;
  /// Eigenvalues of L_c, ascending.
  std::vector<double> spectrum;
  int n_one = 0;
  int n1 = 0;  // eigenvalue -1
  int n2 = 0;  // eigenvalue -1/2
  int n3 = 0;  // eigenvalue 1/2
  std::vector<double> unbinned;
};

/// Rejects c unless |c o c - c| < 1e-10. Bins eigenvalues of L_c at
/// 1, -1, -1/2, 1/2 with absolute tolerance tol; anything else is unbinned.
PeirceData peirce(const MetrisedAlgebra& A, const std::vector<double>& c, double tol = 1e-6);

struct IdempotentSearch {
  std::vector<PeirceData> idempotents;
  int restarts = 0;
  /// Restarts that ended in a verified idempotent before deduplication.
  int converged = 0;
  std::string diagnostic;
};

/// Restart r starts from a Gaussian point drawn from seed_seq{seed, r}, climbs
/// |u| on the unit sphere to x with grad u(x) = lambda x, rescales to
/// c = x / (2 lambda) and Newton-polishes c o c = c. Results are deduplicated
/// at distance 1e-6 in restart order, then sorted.
IdempotentSearch find_idempotents(const MetrisedAlgebra& A, int restarts, std::uint64_t seed,
                                  double tol = 1e-6, unsigned threads = 0);

/// Both sides of <x2,x2> tr L_x - <x2,x3> = (2/3) theta <x,x> <x2,x>
/// with x2 = x o x and x3 = x2 o x.
struct HsiangSides {
  Surd lhs;
  Surd rhs;
};
HsiangSides hsiang_sides(const MetrisedAlgebra& A, const Surd& theta, const SurdVec& x);

struct HsiangReport {
  bool exact = true;
  double max_residual = 0.0;
  int trials = 0;
};
/// Evaluates the identity at random rational points with entries p/q,
/// |p| <= 50, 1 <= q <= 9.
HsiangReport check_hsiang_identity(const MetrisedAlgebra& A, const Surd& theta, int trials,
                                   std::uint64_t seed);

/// Random rational vector with entries p/q, |p| <= 50, 1 <= q <= 9.
SurdVec random_rational_point(int n, std::uint64_t seed, std::uint64_t stream);

}  // namespace mincone
