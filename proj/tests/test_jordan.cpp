#include "doctest.h"
#include "mincone/jordan.hpp"
#include "test_util.hpp"

using namespace mincone;
using Q = Rational;
using M = HermMat3<Q>;

namespace {

Q classical_det(const M& A) {
  // d = 1: [[a, z, y], [z, b, x], [y, x, c]]
  const Q a = A.diag[0], b = A.diag[1], c = A.diag[2];
  const Q x = A.off[0][0], y = A.off[1][0], z = A.off[2][0];
  return a * (b * c - x * x) - z * (z * c - x * y) + y * (z * x - b * y);
}

// Leading principal minors by fraction-free elimination on a copy.
bool positive_definite(std::vector<std::vector<Q>> g) {
  const std::size_t n = g.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(g[k][k]) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Q f = g[i][k] / g[k][k];
      for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
    }
  }
  return true;
}

}  // namespace

TEST_CASE("jordan product basics") {
  const M e1 = M::diagonal(1, 1, 0, 0), e2 = M::diagonal(1, 0, 1, 0);
  CHECK(jordan_mul(e1, e2) == M(1));
  std::mt19937_64 rng(21);
  for (int d : {1, 2, 4, 8}) {
    const M A = testutil::rand_herm(rng, d);
    CHECK(jordan_mul(M::identity(d), A) == A);
    CHECK(jordan_mul(A, testutil::rand_herm(rng, d)).real_dim() == 3 + 3 * d);
  }
  CHECK_THROWS_AS(jordan_mul(M(2), M(4)), InvalidInput);
}

TEST_CASE("Jordan identity holds exactly, all d") {
  std::mt19937_64 rng(22);
  for (int d : {1, 2, 4, 8}) {
    for (int t = 0; t < 3; ++t) {
      const M A = testutil::rand_herm(rng, d), B = testutil::rand_herm(rng, d);
      const M A2 = jordan_mul(A, A);
      CHECK(jordan_mul(A2, jordan_mul(A, B)) == jordan_mul(A, jordan_mul(A2, B)));
    }
  }
}

TEST_CASE("trace form") {
  CHECK(trace_form(M::identity(4), M::identity(4)) == 3);
  const M e11 = M::diagonal(8, 1, 0, 0);
  CHECK(trace_form(e11, e11) == 1);
  std::mt19937_64 rng(23);
  for (int d : {1, 2, 4, 8}) {
    const int n = 3 + 3 * d;
    std::vector<M> basis;
    for (int k = 0; k < n; ++k) basis.push_back(testutil::rand_herm(rng, d));
    std::vector<std::vector<Q>> g(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g[i][j] = trace_form(basis[i], basis[j]);
    }
    CHECK(positive_definite(g));
    // trace(A o B) computed from the product agrees with the closed form.
    CHECK(trace(jordan_mul(basis[0], basis[1])) == trace_form(basis[0], basis[1]));
  }
}

TEST_CASE("weak associativity of the trace form") {
  std::mt19937_64 rng(24);
  for (int d : {1, 2, 4, 8}) {
    for (int t = 0; t < 4; ++t) {
      const M A = testutil::rand_herm(rng, d), B = testutil::rand_herm(rng, d),
              C = testutil::rand_herm(rng, d);
      CHECK(trace_form(jordan_mul(A, B), C) == trace_form(A, jordan_mul(B, C)));
    }
  }
}

TEST_CASE("generic norm") {
  CHECK(freudenthal_det(M::diagonal(1, 2, 3, 5)) == 30);
  CHECK(freudenthal_det(M::diagonal(8, 2, 3, 5)) == 30);
  M ones(1);
  ones.diag = {1, 1, 1};
  for (auto& e : ones.off) e[0] = 1;
  CHECK(freudenthal_det(ones) == 0);
  std::mt19937_64 rng(25);
  for (int t = 0; t < 30; ++t) {
    const M A = testutil::rand_herm(rng, 1);
    CHECK(freudenthal_det(A) == classical_det(A));
  }
}

TEST_CASE("Cayley-Hamilton cross-checks") {
  std::mt19937_64 rng(26);
  for (int d : {1, 2, 4, 8}) {
    for (int t = 0; t < 4; ++t) {
      M A = testutil::rand_herm(rng, d);
      // Adjoint identity A o A# = N(A) I and <A, A#> = 3 N(A).
      const M sharp = adjoint(A);
      const Q N = freudenthal_det(A);
      CHECK(jordan_mul(A, sharp) == M::diagonal(d, N, N, N));
      CHECK(trace_form(A, sharp) == 3 * N);
      // Trace-free A: <A, A o A> = 3 N(A).
      const Q shift = trace(A) / 3;
      for (auto& v : A.diag) v -= shift;
      CHECK(trace(A) == 0);
      CHECK(trace_form(A, jordan_mul(A, A)) == 3 * freudenthal_det(A));
    }
  }
}

TEST_CASE("trace-free basis") {
  const int expected[] = {5, 8, 14, 26};
  int idx = 0;
  for (int d : {1, 2, 4, 8}) {
    const TracefreeBasis b = tracefree_basis(d);
    REQUIRE(static_cast<int>(b.elements.size()) == expected[idx++]);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      CHECK(trace(b.elements[i]) == 0);
      CHECK(b.norms2[i] == trace_form(b.elements[i], b.elements[i]));
      for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
        CHECK(trace_form(b.elements[i], b.elements[j]) == 0);
      }
    }
    CHECK(b.norms2[0] == 2);
    CHECK(b.norms2[1] == 6);
    CHECK(b.norms2[2] == 2);
  }
  CHECK_THROWS_AS(tracefree_basis(3), InvalidInput);
}

TEST_CASE("involution") {
  const M D = M::diagonal(2, 1, 2, 3);
  CHECK(involution(D) == D);
  M A(2);
  A.off[0] = CDElement<Q>::basis(2, 1);
  M expect(2);
  expect.off[0] = -CDElement<Q>::basis(2, 1);
  CHECK(involution(A) == expect);
  std::mt19937_64 rng(27);
  for (int d : {2, 4, 8}) {
    for (int t = 0; t < 4; ++t) {
      const M X = testutil::rand_herm(rng, d), Y = testutil::rand_herm(rng, d);
      CHECK(involution(involution(X)) == X);
      CHECK(trace_form(involution(X), involution(Y)) == trace_form(X, Y));
      CHECK(involution(jordan_mul(X, Y)) == jordan_mul(involution(X), involution(Y)));
    }
  }
}

TEST_CASE("entrywise conjugation is not an automorphism once d = 4") {
  std::mt19937_64 rng(28);
  const M X = testutil::rand_herm(rng, 2), Y = testutil::rand_herm(rng, 2);
  CHECK(conjugate_entries(X) == involution(X));
  const M P = testutil::rand_herm(rng, 4), R = testutil::rand_herm(rng, 4);
  CHECK_FALSE(conjugate_entries(jordan_mul(P, R)) ==
              jordan_mul(conjugate_entries(P), conjugate_entries(R)));
  (void)Y;
}

TEST_CASE("complexification") {
  std::mt19937_64 rng(29);
  for (int d : {1, 2, 8}) {
    const M X = testutil::rand_herm(rng, d), Y = testutil::rand_herm(rng, d);
    const ComplexHermMat3<Q> real_only{X, M(d)};
    const ComplexValue<Q> n0 = complex_det(real_only);
    CHECK(n0.re == freudenthal_det(X));
    CHECK(n0.im == 0);
    const ComplexHermMat3<Q> Z{X, Y};
    const ComplexHermMat3<Q> prod = complex_jordan_mul(Z, complex_adjoint(Z));
    const ComplexValue<Q> N = complex_det(Z);
    CHECK(prod.re == M::diagonal(d, N.re, N.re, N.re));
    CHECK(prod.im == M::diagonal(d, N.im, N.im, N.im));
    CHECK(Z.real_dim() == 2 * (3 + 3 * d));
  }
}
