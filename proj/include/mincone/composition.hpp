#pragma once

// Real composition algebras K_d (d = 1, 2, 4, 8) by Cayley-Dickson doubling.
//
// Doubling convention: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
// Basis products are always +-(basis element), so multiplication runs off a
// d x d table generated once from that rule.

#include <string>
#include <vector>

#include "mincone/common.hpp"

namespace mincone {

bool is_composition_dim(int d);

struct BasisProduct {
  int index;
  int sign;
};

/// Row-major d*d table: e_i e_j = sign * e_index.
const std::vector<BasisProduct>& basis_products(int d);

/// Direct recursive doubling on integer coordinates; used to build the tables.
std::vector<long> doubling_product(const std::vector<long>& a, const std::vector<long>& b);

template <class T>
class CDElement {
 public:
  explicit CDElement(int d) : coeffs_(check(d), T(0)) {}
  CDElement(int d, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    check(d);
    if (static_cast<int>(coeffs_.size()) != d) {
      throw InvalidInput("CDElement: expected " + std::to_string(d) + " coordinates");
    }
  }

  static CDElement real(int d, T value) {
    CDElement e(d);
    e.coeffs_[0] = std::move(value);
    return e;
  }
  static CDElement basis(int d, int k) {
    CDElement e(d);
    e.coeffs_.at(k) = T(1);
    return e;
  }

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const T& operator[](int k) const { return coeffs_[k]; }
  T& operator[](int k) { return coeffs_[k]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  CDElement& operator+=(const CDElement& o) {
    same_dim(o);
    for (int k = 0; k < dim(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  CDElement& operator-=(const CDElement& o) {
    same_dim(o);
    for (int k = 0; k < dim(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  template <class S>
  CDElement& scale(const S& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend CDElement operator+(CDElement a, const CDElement& b) { return a += b; }
  friend CDElement operator-(CDElement a, const CDElement& b) { return a -= b; }
  CDElement operator-() const {
    CDElement r(dim());
    for (int k = 0; k < dim(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
  }
  friend bool operator==(const CDElement& a, const CDElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

  void same_dim(const CDElement& o) const {
    if (o.dim() != dim()) {
      throw InvalidInput("CDElement: dimension mismatch " + std::to_string(dim()) + " vs " +
                         std::to_string(o.dim()));
    }
  }

 private:
  static int check(int d) {
    if (!is_composition_dim(d)) {
      throw InvalidInput("composition algebra dimension must be 1, 2, 4 or 8, got " +
                         std::to_string(d));
    }
    return d;
  }

  std::vector<T> coeffs_;
};

template <class T>
CDElement<T> cd_mul(const CDElement<T>& a, const CDElement<T>& b) {
  a.same_dim(b);
  const int d = a.dim();
  const auto& table = basis_products(d);
  CDElement<T> out(d);
  for (int i = 0; i < d; ++i) {
    if (a[i] == T(0)) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == T(0)) continue;
      const BasisProduct& p = table[i * d + j];
      if (p.sign > 0) {
        out[p.index] += a[i] * b[j];
      } else {
        out[p.index] -= a[i] * b[j];
      }
    }
  }
  return out;
}

template <class T>
CDElement<T> cd_conj(const CDElement<T>& a) {
  CDElement<T> out = a;
  for (int k = 1; k < a.dim(); ++k) out[k] = -a[k];
  return out;
}

template <class T>
T cd_re(const CDElement<T>& a) {
  return a[0];
}

template <class T>
CDElement<T> cd_im(const CDElement<T>& a) {
  CDElement<T> out = a;
  out[0] = T(0);
  return out;
}

/// Euclidean inner product of coordinates; <a,a> = n(a).
template <class T>
T cd_inner(const CDElement<T>& a, const CDElement<T>& b) {
  a.same_dim(b);
  T s(0);
  for (int k = 0; k < a.dim(); ++k) s += a[k] * b[k];
  return s;
}

template <class T>
T cd_norm(const CDElement<T>& a) {
  return cd_inner(a, a);
}

/// The automorphism (p, q) -> (p, -q) of the last doubling step; it fixes
/// K_{d/2} and is complex conjugation when d = 2.
template <class T>
CDElement<T> cd_half_flip(const CDElement<T>& a) {
  CDElement<T> out = a;
  for (int k = a.dim() / 2; k < a.dim(); ++k) {
    if (a.dim() > 1) out[k] = -a[k];
  }
  return out;
}

}  // namespace mincone
