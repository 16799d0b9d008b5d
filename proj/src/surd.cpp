#include "mincone/surd.hpp"

#include <cmath>
#include <ostream>
#include <regex>

namespace mincone {

namespace {

Rational parse_rational(const std::string& text) {
  static const std::regex kRational(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kRational)) {
    throw InvalidInput("malformed rational '" + text + "'");
  }
  Rational q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw InvalidInput("malformed rational '" + text + "'");
  }
  if (text.find('/') != std::string::npos && sgn(q.get_den()) == 0) {
    throw InvalidInput("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

int Surd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 3b^2 wins.
  const int cmp_mag = cmp(a_ * a_, 3 * b_ * b_);
  return cmp_mag > 0 ? sa : sb;
}

Surd Surd::inverse() const {
  if (is_zero()) throw std::domain_error("Surd: division by zero");
  if (is_rational()) return Surd(Rational(1 / a_));
  const Rational n = field_norm();
  return Surd(a_ / n, -b_ / n);
}

double Surd::to_double() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(3.0);
}

Surd& Surd::operator+=(const Surd& o) {
  a_ += o.a_;
  if (!o.is_rational()) b_ += o.b_;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  a_ -= o.a_;
  if (!o.is_rational()) b_ -= o.b_;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    if (!is_rational()) b_ *= o.a_;
    return *this;
  }
  if (is_rational()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + 3 * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::string Surd::str() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    if (sgn(b_) > 0) out += "+";
  }
  out += b_.get_str() + "*sqrt(3)";
  return out;
}

Surd Surd::parse(const std::string& text) {
  static const std::string kTail = "*sqrt(3)";
  if (text.size() <= kTail.size() ||
      text.compare(text.size() - kTail.size(), kTail.size(), kTail) != 0) {
    return Surd(parse_rational(text));
  }
  const std::string body = text.substr(0, text.size() - kTail.size());
  const auto split = body.find_first_of("+-", 1);
  if (split == std::string::npos) return Surd(Rational(0), parse_rational(body));
  return Surd(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

}  // namespace mincone
