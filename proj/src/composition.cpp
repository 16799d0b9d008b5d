#include "mincone/composition.hpp"

#include <array>
#include <mutex>

namespace mincone {

bool is_composition_dim(int d) { return d == 1 || d == 2 || d == 4 || d == 8; }

namespace {

std::vector<long> conj(std::vector<long> a) {
  for (std::size_t k = 1; k < a.size(); ++k) a[k] = -a[k];
  return a;
}

std::vector<long> sub(std::vector<long> a, const std::vector<long>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

std::vector<long> add(std::vector<long> a, const std::vector<long>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::vector<BasisProduct> build_table(int d) {
  std::vector<BasisProduct> table(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::vector<long> ei(d, 0), ej(d, 0);
      ei[i] = 1;
      ej[j] = 1;
      const auto p = doubling_product(ei, ej);
      for (int k = 0; k < d; ++k) {
        if (p[k] != 0) table[i * d + j] = BasisProduct{k, p[k] > 0 ? 1 : -1};
      }
    }
  }
  return table;
}

}  // namespace

std::vector<long> doubling_product(const std::vector<long>& a, const std::vector<long>& b) {
  const std::size_t d = a.size();
  if (b.size() != d || !is_composition_dim(static_cast<int>(d))) {
    throw InvalidInput("doubling_product: bad dimensions");
  }
  if (d == 1) return {a[0] * b[0]};
  const std::size_t h = d / 2;
  const std::vector<long> p(a.begin(), a.begin() + h), q(a.begin() + h, a.end());
  const std::vector<long> r(b.begin(), b.begin() + h), s(b.begin() + h, b.end());
  // (p,q)(r,s) = (pr - conj(s) q, s p + q conj(r))
  auto lo = sub(doubling_product(p, r), doubling_product(conj(s), q));
  auto hi = add(doubling_product(s, p), doubling_product(q, conj(r)));
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

const std::vector<BasisProduct>& basis_products(int d) {
  static std::array<std::vector<BasisProduct>, 4> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    tables[0] = build_table(1);
    tables[1] = build_table(2);
    tables[2] = build_table(4);
    tables[3] = build_table(8);
  });
  switch (d) {
    case 1: return tables[0];
    case 2: return tables[1];
    case 4: return tables[2];
    case 8: return tables[3];
    default: throw InvalidInput("composition algebra dimension must be 1, 2, 4 or 8");
  }
}

}  // namespace mincone
