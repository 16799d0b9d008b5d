#pragma once

// Rank-3 Jordan algebras H3(K_d) of Hermitian 3x3 matrices over the
// composition algebras, and their complexifications.
//
// Layout of A = HermMat3{diag = (a,b,c), off = (x,y,z)}:
//
//     [ a     z     y* ]
//     [ z*    b     x  ]
//     [ y     x*    c  ]
//
// so x sits at (2,3), y at (3,1) and z at (1,2).

#include <array>
#include <utility>
#include <vector>

#include "mincone/composition.hpp"

namespace mincone {

template <class T>
struct HermMat3 {
  int d = 1;
  std::array<T, 3> diag{T(0), T(0), T(0)};
  std::array<CDElement<T>, 3> off{CDElement<T>(1), CDElement<T>(1), CDElement<T>(1)};

  HermMat3() = default;
  explicit HermMat3(int dim)
      : d(dim), off{CDElement<T>(dim), CDElement<T>(dim), CDElement<T>(dim)} {}

  static HermMat3 diagonal(int dim, T a, T b, T c) {
    HermMat3 m(dim);
    m.diag = {std::move(a), std::move(b), std::move(c)};
    return m;
  }
  static HermMat3 identity(int dim) { return diagonal(dim, T(1), T(1), T(1)); }

  /// Real dimension of H3(K_d).
  int real_dim() const { return 3 + 3 * d; }

  /// Entry (i,j) of the full matrix, 0-based.
  CDElement<T> entry(int i, int j) const {
    if (i == j) return CDElement<T>::real(d, diag[i]);
    // (0,1)=z (1,2)=x (2,0)=y; the transposed slots hold conjugates.
    const int k = 3 - i - j;  // index of the missing row/column
    const bool upper = (j == (i + 1) % 3);
    return upper ? off[k] : cd_conj(off[k]);
  }

  HermMat3& operator+=(const HermMat3& o) {
    check_same(o);
    for (int i = 0; i < 3; ++i) {
      diag[i] += o.diag[i];
      off[i] += o.off[i];
    }
    return *this;
  }
  HermMat3& operator-=(const HermMat3& o) {
    check_same(o);
    for (int i = 0; i < 3; ++i) {
      diag[i] -= o.diag[i];
      off[i] -= o.off[i];
    }
    return *this;
  }
  template <class S>
  HermMat3& scale(const S& s) {
    for (int i = 0; i < 3; ++i) {
      diag[i] *= s;
      off[i].scale(s);
    }
    return *this;
  }
  friend HermMat3 operator+(HermMat3 a, const HermMat3& b) { return a += b; }
  friend HermMat3 operator-(HermMat3 a, const HermMat3& b) { return a -= b; }
  friend bool operator==(const HermMat3& a, const HermMat3& b) {
    return a.d == b.d && a.diag == b.diag && a.off == b.off;
  }

  void check_same(const HermMat3& o) const {
    if (o.d != d) {
      throw InvalidInput("HermMat3: base algebra dimension mismatch " + std::to_string(d) +
                         " vs " + std::to_string(o.d));
    }
  }
};

/// A o B = (AB + BA)/2, computed entrywise from the full matrices.
template <class T>
HermMat3<T> jordan_mul(const HermMat3<T>& A, const HermMat3<T>& B) {
  A.check_same(B);
  const int d = A.d;
  auto sym_entry = [&](int i, int j) {
    CDElement<T> s(d);
    for (int k = 0; k < 3; ++k) {
      s += cd_mul(A.entry(i, k), B.entry(k, j));
      s += cd_mul(B.entry(i, k), A.entry(k, j));
    }
    return s;
  };
  HermMat3<T> out(d);
  const T half = T(1) / T(2);
  for (int i = 0; i < 3; ++i) {
    out.diag[i] = cd_re(sym_entry(i, i)) * half;
  }
  out.off[0] = sym_entry(1, 2).scale(half);
  out.off[1] = sym_entry(2, 0).scale(half);
  out.off[2] = sym_entry(0, 1).scale(half);
  return out;
}

template <class T>
T trace(const HermMat3<T>& A) {
  return A.diag[0] + A.diag[1] + A.diag[2];
}

/// Generic trace form trace(A o B) = sum a_i b_i + 2 sum <x_k, y_k>.
template <class T>
T trace_form(const HermMat3<T>& A, const HermMat3<T>& B) {
  A.check_same(B);
  T s = A.diag[0] * B.diag[0] + A.diag[1] * B.diag[1] + A.diag[2] * B.diag[2];
  T o(0);
  for (int k = 0; k < 3; ++k) o += cd_inner(A.off[k], B.off[k]);
  return s + T(2) * o;
}

/// Generic norm: abc - a n(x) - b n(y) - c n(z) + 2 re((xy)z).
template <class T>
T freudenthal_det(const HermMat3<T>& A) {
  const auto& [a, b, c] = A.diag;
  const auto& [x, y, z] = A.off;
  return a * b * c - a * cd_norm(x) - b * cd_norm(y) - c * cd_norm(z) +
         T(2) * cd_re(cd_mul(cd_mul(x, y), z));
}

/// Quadratic adjoint A# = A^2 - T(A) A + S(A) I with S(A) = (T(A)^2 - T(A^2))/2;
/// satisfies A o A# = N(A) I and <A, A#> = 3 N(A).
template <class T>
HermMat3<T> adjoint(const HermMat3<T>& A) {
  HermMat3<T> sq = jordan_mul(A, A);
  const T t = trace(A);
  const T s = (t * t - trace_form(A, A)) / T(2);
  HermMat3<T> scaled = A;
  scaled.scale(t);
  sq -= scaled;
  for (int i = 0; i < 3; ++i) sq.diag[i] += s;
  return sq;
}

/// Flips the upper half of every off-diagonal entry (cd_half_flip). This is
/// an automorphism of order two whose fixed subalgebra is H3(K_{d/2}).
template <class T>
HermMat3<T> involution(const HermMat3<T>& A) {
  HermMat3<T> out = A;
  for (auto& e : out.off) e = cd_half_flip(e);
  return out;
}

/// Entrywise conjugation of the off-diagonal entries. Coincides with
/// involution() for d = 2 only.
template <class T>
HermMat3<T> conjugate_entries(const HermMat3<T>& A) {
  HermMat3<T> out = A;
  for (auto& e : out.off) e = cd_conj(e);
  return out;
}

/// An element X + iY of H3(K_d) (x) C.
template <class T>
struct ComplexHermMat3 {
  HermMat3<T> re;
  HermMat3<T> im;

  int real_dim() const { return 2 * re.real_dim(); }
};

template <class T>
struct ComplexValue {
  T re;
  T im;
};

template <class T>
ComplexHermMat3<T> complex_jordan_mul(const ComplexHermMat3<T>& A, const ComplexHermMat3<T>& B) {
  return {jordan_mul(A.re, B.re) - jordan_mul(A.im, B.im),
          jordan_mul(A.re, B.im) + jordan_mul(A.im, B.re)};
}

/// Complex-bilinear extension of trace_form (no conjugation).
template <class T>
ComplexValue<T> complex_trace_form(const ComplexHermMat3<T>& A, const ComplexHermMat3<T>& B) {
  return {trace_form(A.re, B.re) - trace_form(A.im, B.im),
          trace_form(A.re, B.im) + trace_form(A.im, B.re)};
}

template <class T>
ComplexHermMat3<T> complex_adjoint(const ComplexHermMat3<T>& A) {
  ComplexHermMat3<T> sq = complex_jordan_mul(A, A);
  const ComplexValue<T> t{trace(A.re), trace(A.im)};
  const ComplexValue<T> t2 = complex_trace_form(A, A);
  // S = (t^2 - T(A^2)) / 2
  const T half = T(1) / T(2);
  const T s_re = (t.re * t.re - t.im * t.im - t2.re) * half;
  const T s_im = (T(2) * t.re * t.im - t2.im) * half;
  // sq -= t * A
  HermMat3<T> ta_re = A.re, tmp = A.im, ta_im = A.re, tmp2 = A.im;
  ta_re.scale(t.re);
  tmp.scale(t.im);
  ta_re -= tmp;
  ta_im.scale(t.im);
  tmp2.scale(t.re);
  ta_im += tmp2;
  sq.re -= ta_re;
  sq.im -= ta_im;
  for (int i = 0; i < 3; ++i) {
    sq.re.diag[i] += s_re;
    sq.im.diag[i] += s_im;
  }
  return sq;
}

/// Generic norm of X + iY via N(X + tY) expanded at t = i:
/// N(X) - <X, Y#> + i(<X#, Y> - N(Y)).
template <class T>
ComplexValue<T> complex_det(const ComplexHermMat3<T>& A) {
  return {freudenthal_det(A.re) - trace_form(A.re, adjoint(A.im)),
          trace_form(adjoint(A.re), A.im) - freudenthal_det(A.im)};
}

/// Orthogonal (not normalized) basis of the trace-free part of H3(K_d):
/// diag(1,0,-1), diag(1,-2,1), then the units e_0..e_{d-1} in x, y, z.
/// norms2[i] = trace_form(e_i, e_i); no element has rational unit length.
struct TracefreeBasis {
  int d = 1;
  std::vector<HermMat3<Rational>> elements;
  std::vector<Rational> norms2;
};

TracefreeBasis tracefree_basis(int d);

}  // namespace mincone
