#include "mincone/jordan.hpp"

namespace mincone {

TracefreeBasis tracefree_basis(int d) {
  if (!is_composition_dim(d)) {
    throw InvalidInput("tracefree_basis: d must be 1, 2, 4 or 8, got " + std::to_string(d));
  }
  TracefreeBasis out;
  out.d = d;
  out.elements.push_back(HermMat3<Rational>::diagonal(d, 1, 0, -1));
  out.elements.push_back(HermMat3<Rational>::diagonal(d, 1, -2, 1));
  for (int slot = 0; slot < 3; ++slot) {
    for (int k = 0; k < d; ++k) {
      HermMat3<Rational> e(d);
      e.off[slot] = CDElement<Rational>::basis(d, k);
      out.elements.push_back(std::move(e));
    }
  }
  for (const auto& e : out.elements) out.norms2.push_back(trace_form(e, e));
  return out;
}

}  // namespace mincone
