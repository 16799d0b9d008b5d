#pragma once

#include <iosfwd>
#include <string>

#include "mincone/common.hpp"

namespace mincone {

/// Exact element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
///
/// Every catalog form except the Cartan cubics has b == 0 everywhere; the
/// arithmetic short-circuits on that case so rational work pays for one
/// mpq operation, not four.
class Surd {
 public:
  Surd() = default;
  Surd(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Surd(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  Surd(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Surd(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Surd sqrt3() { return Surd(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  int sign() const;

  Surd conjugate() const { return Surd(a_, -b_); }
  /// Field norm a^2 - 3b^2 (rational).
  Rational field_norm() const { return a_ * a_ - 3 * b_ * b_; }
  Surd inverse() const;
  double to_double() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }
  Surd operator-() const { return Surd(-a_, -b_); }

  friend bool operator==(const Surd& x, const Surd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return y < x; }

  /// "p/q" when rational, otherwise "p/q+r/s*sqrt(3)" (or "r/s*sqrt(3)").
  std::string str() const;
  /// Inverse of str(); throws InvalidInput on malformed text.
  static Surd parse(const std::string& text);

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

}  // namespace mincone
