#pragma once

// Constructors for the named cubic forms and the name -> form registry.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mincone/clifford.hpp"
#include "mincone/cubic_form.hpp"

namespace mincone {

/// u = a x_1^3 on R^n.
CubicForm trivial_cubic(int n, const Surd& a);

/// u(x, y) = sum_i x_i <A_i y, y> on R^(q+1) x R^(2l); x-block first.
/// Throws InvalidInput for systems that fail verify_clifford_system.
CubicForm clifford_cubic(const CliffordSystem& s);

/// u(z) = (1/6) trace(z o z o z) on the trace-free part of H3(K_d), in the
/// coordinates t_1 diag(1,0,-1) + t_2 diag(1,-2,1)/sqrt 3 + off-diagonal units.
/// These are orthonormal for half the trace form; the sqrt 3 makes the
/// coefficients live in Q(sqrt 3).
CubicForm cartan_cubic(int d);

/// u(z) = (1/12) <z#, 3 s(z) - z> on H3(K_d), d in {2,4,8}, with s the
/// involution flipping the upper half of each off-diagonal entry and z# the
/// quadratic adjoint. Off-diagonal components j and j + d/2 are carried by
/// coordinates (p, q) with entries (p+q)/2 and (p-q)/2, which makes the
/// coordinates orthonormal for the trace form.
CubicForm involution_cubic(int d);

/// u(X + iY) = Re <z, z#> = 3 (N(X) - <X, Y#>) on H3(K_d) (x) C, metric
/// tr X^2 + tr Y^2. Component j of an off-diagonal entry of X and the same
/// component of Y are carried by (p, q) as above.
CubicForm complexified_cubic(int d);

/// (1/6) trace(z o z o z) on zero-diagonal H3(O) with purely imaginary
/// off-diagonal entries x, y, z; coordinates are their e_1..e_7 components.
CubicForm albert_contraction_cubic();

/// re((w1 w2) w3) for imaginary octonions w1, w2, w3 (same coordinates).
CubicForm octonion_cubic21();

using Triple = std::array<int, 3>;

struct CatalogEntry {
  std::string name;
  int dim = 0;
  std::optional<Triple> expected_triple;
  /// "table" when the triple is a row of the admissible table, "computed"
  /// when it is only an observation of this implementation, "none" otherwise.
  std::string triple_source;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);
CubicForm build_catalog_form(const std::string& name);

}  // namespace mincone
