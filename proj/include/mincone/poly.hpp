#pragma once

// Sparse multivariate polynomials over Q(sqrt 3).
//
// A monomial is the sorted multiset of its variable indices, packed one byte
// per factor (index + 1) from the most significant byte down. That caps the
// engine at 255 variables and total degree 8, which is plenty here: the
// largest polynomials met are degree-5 residuals.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mincone/surd.hpp"

namespace mincone {

class Poly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxDegree = 8;
  static constexpr int kMaxVars = 255;

  Poly() = default;
  Poly(int c) : Poly(Surd(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(const Surd& c);

  static Poly var(int i);
  static Poly monomial(const std::vector<int>& vars, const Surd& c);

  static Key make_key(std::vector<int> vars);
  static std::vector<int> key_vars(Key k);
  static int key_degree(Key k);
  static Key key_mul(Key a, Key b);

  const std::map<Key, Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  /// One past the largest variable index that occurs.
  int var_bound() const;
  std::size_t size() const { return terms_.size(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Surd& s);
  /// Division by a nonzero constant polynomial only.
  Poly& operator/=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Surd& s) { return a *= s; }
  friend Poly operator*(const Surd& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Poly& b) { return a /= b; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(int var) const;
  Surd coefficient(Key k) const;

  Surd evaluate(const std::vector<Surd>& x) const;
  double evaluate(const std::vector<double>& x) const;

  /// Human-readable, e.g. "3*x1*x2^2 - 1/2*x3"; 1-based variable names.
  std::string str() const;

 private:
  void add_term(Key k, const Surd& c);
  std::map<Key, Surd> terms_;
};

}  // namespace mincone
