#pragma once

// Hurwitz-Radon numbers and symmetric Clifford systems A_0..A_q:
// A_i symmetric, A_i^2 = I, A_i A_j + A_j A_i = 0 for i != j.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mincone/common.hpp"

namespace mincone {

/// Dense square matrix with rational entries, row-major.
struct RatMatrix {
  int n = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  explicit RatMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  static RatMatrix identity(int size);
  static RatMatrix from_rows(const std::vector<std::vector<long>>& rows);

  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
  friend bool operator==(const RatMatrix& x, const RatMatrix& y) { return x.n == y.n && x.a == y.a; }
  RatMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
};

RatMatrix kron(const RatMatrix& x, const RatMatrix& y);

/// rho(m) = 8a + 2^b for m = 2^(4a+b) * odd, 0 <= b <= 3.
long hurwitz_radon(long m);

struct CliffordSystem {
  int q = 0;
  int two_l = 0;
  std::vector<RatMatrix> mats;
};

struct CliffordCheck {
  bool ok = true;
  /// Empty when ok, otherwise the first violated relation.
  std::string violation;
};

CliffordCheck verify_clifford_system(const CliffordSystem& s);

/// q+1 matrices built from signed tensor products of I, diag(1,-1),
/// [[0,1],[1,0]] and [[0,1],[-1,0]]. Always verified before returning.
CliffordSystem build_clifford_system(int q);

nlohmann::ordered_json clifford_to_json(const CliffordSystem& s);

}  // namespace mincone
