#include "mincone/cubic_form.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mincone {

CubicForm::CubicForm(int n) : n_(n) {
  if (n < 1 || n > Poly::kMaxVars) {
    throw InvalidInput("CubicForm: dimension must be in [1, 255], got " + std::to_string(n));
  }
}

bool CubicForm::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

void CubicForm::add_term(int i, int j, int k, const Surd& c) {
  Index idx{i, j, k};
  for (int v : idx) {
    if (v < 0 || v >= n_) {
      throw InvalidInput("CubicForm: index " + std::to_string(v + 1) + " outside 1.." +
                         std::to_string(n_));
    }
  }
  std::sort(idx.begin(), idx.end());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Surd CubicForm::coefficient(int i, int j, int k) const {
  Index idx{i, j, k};
  std::sort(idx.begin(), idx.end());
  const auto it = terms_.find(idx);
  return it == terms_.end() ? Surd(0) : it->second;
}

void CubicForm::set_variables(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != n_) {
    throw InvalidInput("CubicForm: expected " + std::to_string(n_) + " variable labels");
  }
  variables_ = std::move(names);
}

void CubicForm::check_point(std::size_t size) const {
  if (static_cast<int>(size) != n_) {
    throw InvalidInput("CubicForm: point has length " + std::to_string(size) + ", expected " +
                       std::to_string(n_));
  }
}

Surd CubicForm::eval(const std::vector<Surd>& x) const {
  check_point(x.size());
  Surd total(0);
  for (const auto& [idx, c] : terms_) total += c * x[idx[0]] * x[idx[1]] * x[idx[2]];
  return total;
}

double CubicForm::eval(const std::vector<double>& x) const {
  check_point(x.size());
  double total = 0.0;
  for (const auto& [idx, c] : terms_) total += c.to_double() * x[idx[0]] * x[idx[1]] * x[idx[2]];
  return total;
}

namespace {

template <class S, class Entries>
S polarize_impl(const Entries& entries, const std::vector<S>& x, const std::vector<S>& y,
                const std::vector<S>& z) {
  S total(0);
  for (const auto& e : entries) total += e.m * x[e.a] * y[e.b] * z[e.c];
  return total;
}

}  // namespace

Surd CubicForm::polarize(const std::vector<Surd>& x, const std::vector<Surd>& y,
                         const std::vector<Surd>& z) const {
  check_point(x.size());
  check_point(y.size());
  check_point(z.size());
  return polarize_impl(expanded(), x, y, z);
}

double CubicForm::polarize(const std::vector<double>& x, const std::vector<double>& y,
                           const std::vector<double>& z) const {
  check_point(x.size());
  check_point(y.size());
  check_point(z.size());
  return polarize_impl(expanded_double(), x, y, z);
}

Poly CubicForm::to_poly() const {
  Poly p;
  for (const auto& [idx, c] : terms_) p += Poly::monomial({idx[0], idx[1], idx[2]}, c);
  return p;
}

CubicForm CubicForm::from_poly(const Poly& p, int n) {
  CubicForm u(n);
  for (const auto& [key, c] : p.terms()) {
    const auto vars = Poly::key_vars(key);
    if (vars.size() != 3) throw InvalidInput("CubicForm::from_poly: polynomial is not a cubic form");
    u.add_term(vars[0], vars[1], vars[2], c);
  }
  return u;
}

std::vector<Poly> CubicForm::gradient() const {
  const Poly p = to_poly();
  std::vector<Poly> g;
  g.reserve(n_);
  for (int i = 0; i < n_; ++i) g.push_back(p.derivative(i));
  return g;
}

std::vector<std::vector<Poly>> CubicForm::hessian() const {
  const auto g = gradient();
  std::vector<std::vector<Poly>> h(n_, std::vector<Poly>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      h[i][j] = g[i].derivative(j);
      if (j != i) h[j][i] = h[i][j];
    }
  }
  return h;
}

Poly CubicForm::laplacian() const {
  // Only the x_i^2 x_k terms contribute: d^2/dx_i^2 (x_i^2 x_k) = 2 x_k.
  Poly lap;
  for (const auto& [idx, c] : terms_) {
    const auto [i, j, k] = idx;
    if (i == j && j == k) {
      lap += Poly::monomial({i}, c * Surd(6));
    } else if (i == j) {
      lap += Poly::monomial({k}, c * Surd(2));
    } else if (j == k) {
      lap += Poly::monomial({i}, c * Surd(2));
    }
  }
  return lap;
}

CubicForm CubicForm::scaled(const Surd& t) const {
  CubicForm u(n_);
  for (const auto& [idx, c] : terms_) u.add_term(idx[0], idx[1], idx[2], c * t);
  u.variables_ = variables_;
  return u;
}

CubicForm CubicForm::transformed(const std::vector<std::vector<Surd>>& R) const {
  if (static_cast<int>(R.size()) != n_) throw InvalidInput("CubicForm::transformed: bad matrix");
  std::vector<Poly> rx(n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(R[i].size()) != n_) {
      throw InvalidInput("CubicForm::transformed: bad matrix");
    }
    for (int j = 0; j < n_; ++j) {
      if (!R[i][j].is_zero()) rx[i] += Poly::var(j) * R[i][j];
    }
  }
  Poly p;
  for (const auto& [idx, c] : terms_) p += rx[idx[0]] * rx[idx[1]] * rx[idx[2]] * c;
  return from_poly(p, n_);
}

std::vector<TensorEntry<Surd>> CubicForm::expanded() const {
  std::vector<TensorEntry<Surd>> out;
  out.reserve(6 * terms_.size());
  for (const auto& [idx, c] : terms_) {
    Index p = idx;
    do {
      out.push_back({p[0], p[1], p[2], c});
    } while (std::next_permutation(p.begin(), p.end()));
    // Repeated indices give fewer distinct orderings; restore the 6-fold count.
    const std::size_t distinct = (idx[0] == idx[2]) ? 1 : (idx[0] == idx[1] || idx[1] == idx[2]) ? 3 : 6;
    const Surd weight(static_cast<long>(6 / distinct));
    for (std::size_t k = out.size() - distinct; k < out.size(); ++k) out[k].m *= weight;
  }
  return out;
}

std::vector<TensorEntry<double>> CubicForm::expanded_double() const {
  std::vector<TensorEntry<double>> out;
  for (const auto& e : expanded()) out.push_back({e.a, e.b, e.c, e.m.to_double()});
  return out;
}

double CubicForm::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c.to_double()));
  return m;
}

nlohmann::ordered_json cubic_to_json(const CubicForm& u) {
  nlohmann::ordered_json j;
  j["dim"] = u.dim();
  if (!u.variables().empty()) j["variables"] = u.variables();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : u.terms()) {
    nlohmann::ordered_json t;
    t["ijk"] = {idx[0] + 1, idx[1] + 1, idx[2] + 1};
    t["c"] = c.str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

CubicForm cubic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) {
    throw InvalidInput("cubic form JSON needs \"dim\" and \"terms\"");
  }
  if (!j["dim"].is_number_integer()) throw InvalidInput("\"dim\" must be an integer");
  CubicForm u(j["dim"].get<int>());
  if (!j["terms"].is_array()) throw InvalidInput("\"terms\" must be an array");
  std::map<CubicForm::Index, bool> seen;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("ijk") || !t.contains("c") || !t["ijk"].is_array() ||
        t["ijk"].size() != 3) {
      throw InvalidInput("each term needs \"ijk\" (3 indices) and \"c\"");
    }
    CubicForm::Index idx{};
    for (int k = 0; k < 3; ++k) {
      if (!t["ijk"][k].is_number_integer()) throw InvalidInput("term indices must be integers");
      idx[k] = t["ijk"][k].get<int>() - 1;
    }
    std::sort(idx.begin(), idx.end());
    if (seen.count(idx)) {
      throw InvalidInput("duplicate term [" + std::to_string(idx[0] + 1) + "," +
                         std::to_string(idx[1] + 1) + "," + std::to_string(idx[2] + 1) + "]");
    }
    seen[idx] = true;
    Surd c;
    if (t["c"].is_string()) {
      c = Surd::parse(t["c"].get<std::string>());
    } else if (t["c"].is_number_integer()) {
      c = Surd(t["c"].get<long>());
    } else {
      throw InvalidInput("coefficients must be exact strings like \"p/q\"");
    }
    u.add_term(idx[0], idx[1], idx[2], c);
  }
  if (j.contains("variables")) {
    if (!j["variables"].is_array()) throw InvalidInput("\"variables\" must be an array");
    u.set_variables(j["variables"].get<std::vector<std::string>>());
  }
  return u;
}

std::string cubic_to_json_string(const CubicForm& u) { return cubic_to_json(u).dump(); }

CubicForm read_cubic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("'" + path + "': " + e.what());
  }
  return cubic_from_json(j);
}

void write_cubic_file(const CubicForm& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << cubic_to_json(u).dump(1) << "\n";
}

}  // namespace mincone
