#include "mincone/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mincone/jordan.hpp"

namespace mincone {

namespace {

Surd half() { return Surd(Rational(1, 2)); }

std::string slot_name(int slot) { return std::string(1, "xyz"[slot]); }

}  // namespace

CubicForm trivial_cubic(int n, const Surd& a) {
  CubicForm u(n);
  u.add_term(0, 0, 0, a);
  return u;
}

CubicForm clifford_cubic(const CliffordSystem& s) {
  const CliffordCheck check = verify_clifford_system(s);
  if (!check.ok) throw InvalidInput("clifford_cubic: not a Clifford system: " + check.violation);
  const int m = s.q + 1;
  CubicForm u(m + s.two_l);
  for (int i = 0; i < m; ++i) {
    const RatMatrix& A = s.mats[i];
    for (int a = 0; a < s.two_l; ++a) {
      for (int b = 0; b < s.two_l; ++b) {
        if (sgn(A(a, b)) != 0) u.add_term(i, m + a, m + b, Surd(A(a, b)));
      }
    }
  }
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
  for (int a = 0; a < s.two_l; ++a) names.push_back("y" + std::to_string(a + 1));
  u.set_variables(std::move(names));
  return u;
}

CubicForm cartan_cubic(int d) {
  if (!is_composition_dim(d)) throw InvalidInput("cartan_cubic: d must be 1, 2, 4 or 8");
  const int n = 2 + 3 * d;
  HermMat3<Poly> z(d);
  const Poly t0 = Poly::var(0);
  const Poly t1 = Poly::var(1) * Surd(Rational(0), Rational(1, 3));  // t_2 / sqrt 3
  z.diag = {t0 + t1, Poly(-2) * t1, -t0 + t1};
  std::vector<std::string> names{"t1", "t2"};
  for (int slot = 0; slot < 3; ++slot) {
    for (int k = 0; k < d; ++k) {
      z.off[slot][k] = Poly::var(2 + slot * d + k);
      names.push_back(slot_name(slot) + std::to_string(k));
    }
  }
  const Poly p = trace_form(z, jordan_mul(z, z)) * Surd(Rational(1, 6));
  CubicForm u = CubicForm::from_poly(p, n);
  u.set_variables(std::move(names));
  return u;
}

CubicForm involution_cubic(int d) {
  if (d != 2 && d != 4 && d != 8) throw InvalidInput("involution_cubic: d must be 2, 4 or 8");
  const int n = 3 + 3 * d;
  const int h = d / 2;
  HermMat3<Poly> z(d);
  z.diag = {Poly::var(0), Poly::var(1), Poly::var(2)};
  std::vector<std::string> names{"a", "b", "c"};
  int next = 3;
  for (int slot = 0; slot < 3; ++slot) {
    for (int j = 0; j < h; ++j) {
      const Poly p = Poly::var(next), q = Poly::var(next + 1);
      z.off[slot][j] = (p + q) * half();
      z.off[slot][j + h] = (p - q) * half();
      const std::string tag = slot_name(slot) + std::to_string(j) + "," + std::to_string(j + h);
      names.push_back(tag + "+");
      names.push_back(tag + "-");
      next += 2;
    }
  }
  HermMat3<Poly> w = involution(z);
  w.scale(Poly(3));
  w -= z;
  const Poly p = trace_form(adjoint(z), w) * Surd(Rational(1, 12));
  CubicForm u = CubicForm::from_poly(p, n);
  u.set_variables(std::move(names));
  return u;
}

CubicForm complexified_cubic(int d) {
  if (!is_composition_dim(d)) throw InvalidInput("complexified_cubic: d must be 1, 2, 4 or 8");
  const int n = 6 + 6 * d;
  HermMat3<Poly> X(d), Y(d);
  X.diag = {Poly::var(0), Poly::var(1), Poly::var(2)};
  Y.diag = {Poly::var(3), Poly::var(4), Poly::var(5)};
  std::vector<std::string> names{"Xa", "Xb", "Xc", "Ya", "Yb", "Yc"};
  int next = 6;
  for (int slot = 0; slot < 3; ++slot) {
    for (int j = 0; j < d; ++j) {
      const Poly p = Poly::var(next), q = Poly::var(next + 1);
      X.off[slot][j] = (p + q) * half();
      Y.off[slot][j] = (p - q) * half();
      const std::string tag = slot_name(slot) + std::to_string(j);
      names.push_back(tag + "+");
      names.push_back(tag + "-");
      next += 2;
    }
  }
  const ComplexValue<Poly> N = complex_det(ComplexHermMat3<Poly>{X, Y});
  CubicForm u = CubicForm::from_poly(N.re * Surd(3), n);
  u.set_variables(std::move(names));
  return u;
}

namespace {

std::vector<std::string> imaginary_octonion_names() {
  std::vector<std::string> names;
  for (int slot = 0; slot < 3; ++slot) {
    for (int k = 1; k < 8; ++k) names.push_back(slot_name(slot) + std::to_string(k));
  }
  return names;
}

CDElement<Poly> imaginary_octonion(int first_var) {
  CDElement<Poly> w(8);
  for (int k = 1; k < 8; ++k) w[k] = Poly::var(first_var + k - 1);
  return w;
}

}  // namespace

CubicForm albert_contraction_cubic() {
  HermMat3<Poly> z(8);
  for (int slot = 0; slot < 3; ++slot) z.off[slot] = imaginary_octonion(7 * slot);
  const Poly p = trace_form(z, jordan_mul(z, z)) * Surd(Rational(1, 6));
  CubicForm u = CubicForm::from_poly(p, 21);
  u.set_variables(imaginary_octonion_names());
  return u;
}

CubicForm octonion_cubic21() {
  const auto w1 = imaginary_octonion(0), w2 = imaginary_octonion(7), w3 = imaginary_octonion(14);
  CubicForm u = CubicForm::from_poly(cd_re(cd_mul(cd_mul(w1, w2), w3)), 21);
  u.set_variables(imaginary_octonion_names());
  return u;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"trivial", 3, std::nullopt, "none", "x1^3 on R^3"},
      {"dim3", 3, Triple{0, 2, 0}, "computed", "x(y^2 - z^2), the Clifford form with q = 0"},
      {"clifford-q1", 4, Triple{1, 1, 1}, "computed", "Clifford form, q = 1"},
      {"clifford-q2", 7, Triple{2, 1, 3}, "computed", "Clifford form, q = 2"},
      {"cartan-d1", 5, Triple{2, 0, 2}, "table", "Cartan cubic over R"},
      {"cartan-d2", 8, Triple{3, 0, 4}, "table", "Cartan cubic over C"},
      {"cartan-d4", 14, Triple{5, 0, 8}, "table", "Cartan cubic over H"},
      {"cartan-d8", 26, Triple{9, 0, 16}, "table", "Cartan cubic over O"},
      {"involution-d2", 9, Triple{0, 5, 3}, "table", "involution form on H3(C)"},
      {"involution-d4", 15, Triple{0, 8, 6}, "table", "involution form on H3(H)"},
      {"involution-d8", 27, Triple{0, 14, 12}, "table", "involution form on H3(O)"},
      {"complexified-d1", 12, Triple{1, 5, 5}, "table", "Re N on H3(R) (x) C"},
      {"complexified-d2", 18, Triple{1, 8, 8}, "table", "Re N on H3(C) (x) C"},
      {"complexified-d4", 30, Triple{1, 14, 14}, "table", "Re N on H3(H) (x) C"},
      {"complexified-d8", 54, Triple{1, 26, 26}, "table", "Re N on H3(O) (x) C"},
      {"albert21", 21, Triple{4, 5, 11}, "table", "trace cubic on H3(O) minus H3(R)"},
      {"octonion21", 21, Triple{4, 5, 11}, "table", "re(w1 w2 w3), w_i imaginary octonions"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& all = catalog_entries();
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.name == name; });
  if (it == all.end()) throw InvalidInput("unknown catalog form '" + name + "'");
  return *it;
}

namespace {

CubicForm construct(const std::string& name) {
  if (name == "trivial") return trivial_cubic(3, Surd(1));
  if (name == "dim3") return clifford_cubic(build_clifford_system(0));
  if (name == "clifford-q1") return clifford_cubic(build_clifford_system(1));
  if (name == "clifford-q2") return clifford_cubic(build_clifford_system(2));
  if (name == "albert21") return albert_contraction_cubic();
  if (name == "octonion21") return octonion_cubic21();
  const auto dash = name.rfind("-d");
  if (dash != std::string::npos) {
    const std::string family = name.substr(0, dash);
    const int d = std::stoi(name.substr(dash + 2));
    if (family == "cartan") return cartan_cubic(d);
    if (family == "involution") return involution_cubic(d);
    if (family == "complexified") return complexified_cubic(d);
  }
  throw InvalidInput("unknown catalog form '" + name + "'");
}

}  // namespace

CubicForm build_catalog_form(const std::string& name) {
  catalog_entry(name);  // validates the name
  // Construction of the larger forms takes a noticeable moment; memoize.
  static std::mutex mu;
  static std::map<std::string, CubicForm> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  CubicForm u = construct(name);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(name, u);
  return u;
}

}  // namespace mincone
