#pragma once

// Homogeneous cubic forms u(x) = sum_{i<=j<=k} m_ijk x_i x_j x_k.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "mincone/poly.hpp"

namespace mincone {

/// One ordered-index contribution m * x_a y_b z_c to the polarization
/// u(x;y;z). Each monomial expands to its 6 index permutations, repeated
/// indices included, so that u(x;x;x) = 6u(x).
template <class S>
struct TensorEntry {
  int a, b, c;
  S m;
};

class CubicForm {
 public:
  using Index = std::array<int, 3>;

  CubicForm() = default;
  explicit CubicForm(int n);

  int dim() const { return n_; }
  const std::map<Index, Surd>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  /// Adds c * x_i x_j x_k (0-based, any order).
  void add_term(int i, int j, int k, const Surd& c);
  Surd coefficient(int i, int j, int k) const;

  /// Optional coordinate labels, carried through JSON.
  const std::vector<std::string>& variables() const { return variables_; }
  void set_variables(std::vector<std::string> names);

  Surd eval(const std::vector<Surd>& x) const;
  double eval(const std::vector<double>& x) const;

  Surd polarize(const std::vector<Surd>& x, const std::vector<Surd>& y,
                const std::vector<Surd>& z) const;
  double polarize(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& z) const;

  Poly to_poly() const;
  /// Throws InvalidInput unless p is homogeneous of degree 3 (or zero) in < n variables.
  static CubicForm from_poly(const Poly& p, int n);

  std::vector<Poly> gradient() const;
  std::vector<std::vector<Poly>> hessian() const;
  Poly laplacian() const;

  CubicForm scaled(const Surd& t) const;
  /// The form x -> u(R x) for an n x n matrix R.
  CubicForm transformed(const std::vector<std::vector<Surd>>& R) const;

  std::vector<TensorEntry<Surd>> expanded() const;
  std::vector<TensorEntry<double>> expanded_double() const;

  /// Largest absolute coefficient, as a double.
  double max_abs_coefficient() const;

  friend bool operator==(const CubicForm& a, const CubicForm& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_point(std::size_t size) const;

  int n_ = 0;
  std::map<Index, Surd> terms_;
  std::vector<std::string> variables_;
};

/// {"dim": n, "terms": [{"ijk": [i,j,k], "c": "p/q"}, ...]} with 1-based sorted
/// indices and terms in lexicographic order; "variables" is added when labels exist.
nlohmann::ordered_json cubic_to_json(const CubicForm& u);
CubicForm cubic_from_json(const nlohmann::json& j);

std::string cubic_to_json_string(const CubicForm& u);
CubicForm read_cubic_file(const std::string& path);
void write_cubic_file(const CubicForm& u, const std::string& path);

}  // namespace mincone
