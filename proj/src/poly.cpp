#include "mincone/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mincone {

namespace {

constexpr int kBits = 8;

int byte_at(Poly::Key k, int pos) {
  return static_cast<int>((k >> (kBits * (Poly::kMaxDegree - 1 - pos))) & 0xFFu);
}

}  // namespace

Poly::Poly(const Surd& c) {
  if (!c.is_zero()) terms_.emplace(Key{0}, c);
}

Poly Poly::var(int i) { return monomial({i}, Surd(1)); }

Poly Poly::monomial(const std::vector<int>& vars, const Surd& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(make_key(vars), c);
  return p;
}

Poly::Key Poly::make_key(std::vector<int> vars) {
  if (static_cast<int>(vars.size()) > kMaxDegree) {
    throw InvalidInput("Poly: degree exceeds " + std::to_string(kMaxDegree));
  }
  std::sort(vars.begin(), vars.end());
  Key k = 0;
  for (std::size_t pos = 0; pos < vars.size(); ++pos) {
    if (vars[pos] < 0 || vars[pos] >= kMaxVars) {
      throw InvalidInput("Poly: variable index out of range: " + std::to_string(vars[pos]));
    }
    k |= static_cast<Key>(vars[pos] + 1) << (kBits * (kMaxDegree - 1 - pos));
  }
  return k;
}

std::vector<int> Poly::key_vars(Key k) {
  std::vector<int> out;
  for (int pos = 0; pos < kMaxDegree; ++pos) {
    const int b = byte_at(k, pos);
    if (b == 0) break;
    out.push_back(b - 1);
  }
  return out;
}

int Poly::key_degree(Key k) {
  int deg = 0;
  while (deg < kMaxDegree && byte_at(k, deg) != 0) ++deg;
  return deg;
}

Poly::Key Poly::key_mul(Key a, Key b) {
  if (a == 0) return b;
  if (b == 0) return a;
  // Merge two sorted byte strings.
  const int da = key_degree(a), db = key_degree(b);
  if (da + db > kMaxDegree) {
    throw InvalidInput("Poly: degree exceeds " + std::to_string(kMaxDegree));
  }
  Key out = 0;
  int i = 0, j = 0;
  for (int pos = 0; pos < da + db; ++pos) {
    int v;
    if (j >= db || (i < da && byte_at(a, i) <= byte_at(b, j))) {
      v = byte_at(a, i++);
    } else {
      v = byte_at(b, j++);
    }
    out |= static_cast<Key>(v) << (kBits * (kMaxDegree - 1 - pos));
  }
  return out;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) deg = std::max(deg, key_degree(k));
  return deg;
}

int Poly::var_bound() const {
  int bound = 0;
  for (const auto& [k, c] : terms_) {
    for (int v : key_vars(k)) bound = std::max(bound, v + 1);
  }
  return bound;
}

void Poly::add_term(Key k, const Surd& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(Poly::key_mul(ka, kb), ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Surd& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Poly& Poly::operator/=(const Poly& o) {
  if (o.terms_.size() != 1 || o.terms_.begin()->first != 0) {
    throw InvalidInput("Poly: division only by nonzero constants");
  }
  return *this *= o.terms_.begin()->second.inverse();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out;
  for (const auto& [k, c] : terms_) {
    std::vector<int> vars = key_vars(k);
    const auto first = std::find(vars.begin(), vars.end(), var);
    if (first == vars.end()) continue;
    const long mult = std::count(vars.begin(), vars.end(), var);
    vars.erase(first);
    out.add_term(make_key(std::move(vars)), c * Surd(mult));
  }
  return out;
}

Surd Poly::coefficient(Key k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Surd(0) : it->second;
}

Surd Poly::evaluate(const std::vector<Surd>& x) const {
  Surd total(0);
  for (const auto& [k, c] : terms_) {
    Surd term = c;
    for (int v : key_vars(k)) {
      if (v >= static_cast<int>(x.size())) throw InvalidInput("Poly::evaluate: point too short");
      term *= x[v];
    }
    total += term;
  }
  return total;
}

double Poly::evaluate(const std::vector<double>& x) const {
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double term = c.to_double();
    for (int v : key_vars(k)) {
      if (v >= static_cast<int>(x.size())) throw InvalidInput("Poly::evaluate: point too short");
      term *= x[v];
    }
    total += term;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    const auto vars = key_vars(k);
    for (std::size_t i = 0; i < vars.size();) {
      std::size_t j = i;
      while (j < vars.size() && vars[j] == vars[i]) ++j;
      os << "*x" << vars[i] + 1;
      if (j - i > 1) os << "^" << j - i;
      i = j;
    }
  }
  return os.str();
}

}  // namespace mincone
