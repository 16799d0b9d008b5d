#include "mincone/clifford.hpp"

#include <functional>

namespace mincone {

RatMatrix RatMatrix::identity(int size) {
  RatMatrix m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.n) throw InvalidInput("RatMatrix: rows must be square");
    for (int j = 0; j < m.n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.n != y.n) throw InvalidInput("RatMatrix: size mismatch");
  RatMatrix z(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        if (sgn(y(k, j)) != 0) z(i, j) += x(i, k) * y(k, j);
      }
    }
  }
  return z;
}

RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
  if (x.n != y.n) throw InvalidInput("RatMatrix: size mismatch");
  RatMatrix z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
  return z;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational RatMatrix::trace() const {
  Rational s = 0;
  for (int i = 0; i < n; ++i) s += (*this)(i, i);
  return s;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : a) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

RatMatrix kron(const RatMatrix& x, const RatMatrix& y) {
  RatMatrix z(x.n * y.n);
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) {
      if (sgn(x(i, j)) == 0) continue;
      for (int k = 0; k < y.n; ++k) {
        for (int l = 0; l < y.n; ++l) z(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
      }
    }
  }
  return z;
}

long hurwitz_radon(long m) {
  if (m < 1) throw InvalidInput("hurwitz_radon: m must be >= 1, got " + std::to_string(m));
  long e = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++e;
  }
  const long a = e / 4;
  const long b = e % 4;
  return 8 * a + (1L << b);
}

CliffordCheck verify_clifford_system(const CliffordSystem& s) {
  auto fail = [](std::string why) { return CliffordCheck{false, std::move(why)}; };
  if (static_cast<int>(s.mats.size()) != s.q + 1) {
    return fail("expected " + std::to_string(s.q + 1) + " matrices, got " +
                std::to_string(s.mats.size()));
  }
  if (s.two_l <= 0 || s.two_l % 2 != 0) return fail("ambient dimension must be even and positive");
  const RatMatrix id = RatMatrix::identity(s.two_l);
  for (int i = 0; i <= s.q; ++i) {
    const RatMatrix& A = s.mats[i];
    const std::string name = "A" + std::to_string(i);
    if (A.n != s.two_l) return fail(name + " has wrong size");
    if (!(A.transpose() == A)) return fail(name + " is not symmetric");
    if (!(A * A == id)) return fail(name + "^2 != I");
  }
  for (int i = 0; i <= s.q; ++i) {
    for (int j = i + 1; j <= s.q; ++j) {
      if (!(s.mats[i] * s.mats[j] + s.mats[j] * s.mats[i]).is_zero()) {
        return fail("A" + std::to_string(i) + " A" + std::to_string(j) + " + A" +
                    std::to_string(j) + " A" + std::to_string(i) + " != 0");
      }
    }
  }
  return {};
}

namespace {

// Generators: 0 = I, 1 = P = diag(1,-1), 2 = Q = [[0,1],[1,0]], 3 = J = [[0,1],[-1,0]].
// P, Q, J pairwise anticommute; J is the only antisymmetric one.
const RatMatrix& generator(int g) {
  static const RatMatrix gens[4] = {
      RatMatrix::from_rows({{1, 0}, {0, 1}}),
      RatMatrix::from_rows({{1, 0}, {0, -1}}),
      RatMatrix::from_rows({{0, 1}, {1, 0}}),
      RatMatrix::from_rows({{0, 1}, {-1, 0}}),
  };
  return gens[g];
}

// Words of length t over {I,P,Q,J}. Two words commute or anticommute
// according to the parity of the positions where both letters are
// non-identity and different; a word is symmetric iff it has an even number
// of J letters, and then it squares to I.
struct Word {
  std::vector<int> letters;
};

bool anticommute(const Word& x, const Word& y) {
  int parity = 0;
  for (std::size_t k = 0; k < x.letters.size(); ++k) {
    const int a = x.letters[k], b = y.letters[k];
    if (a != 0 && b != 0 && a != b) parity ^= 1;
  }
  return parity == 1;
}

RatMatrix word_matrix(const Word& w) {
  RatMatrix m = generator(w.letters[0]);
  for (std::size_t k = 1; k < w.letters.size(); ++k) m = kron(m, generator(w.letters[k]));
  return m;
}

// Backtracking clique search among symmetric words on 2^t dimensions.
std::optional<std::vector<Word>> search_words(int count, int t) {
  std::vector<Word> symmetric;
  const int total = 1 << (2 * t);
  for (int code = 0; code < total; ++code) {
    Word w;
    int js = 0;
    bool identity = true;
    for (int k = 0; k < t; ++k) {
      const int letter = (code >> (2 * (t - 1 - k))) & 3;
      w.letters.push_back(letter);
      js += letter == 3;
      identity = identity && letter == 0;
    }
    if (js % 2 == 0 && !identity) symmetric.push_back(std::move(w));
  }
  std::vector<int> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == count) return true;
    for (std::size_t c = start; c < symmetric.size(); ++c) {
      bool ok = true;
      for (int p : chosen) {
        if (!anticommute(symmetric[p], symmetric[c])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(c));
      if (extend(c + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::vector<Word> out;
  for (int p : chosen) out.push_back(symmetric[p]);
  return out;
}

// Smallest l with rho(l) >= q, i.e. the smallest ambient 2l.
int minimal_two_l(int q) {
  long l = 1;
  while (hurwitz_radon(l) < q) l *= 2;
  return static_cast<int>(2 * l);
}

}  // namespace

CliffordSystem build_clifford_system(int q) {
  if (q < 0) throw InvalidInput("build_clifford_system: q must be >= 0");
  if (q > 24) throw InvalidInput("build_clifford_system: q > 24 is not supported");
  CliffordSystem s;
  s.q = q;
  if (q <= 8) {
    s.two_l = minimal_two_l(q);
    int t = 0;
    while ((1 << t) < s.two_l) ++t;
    // The word search has not been observed to need a larger t, but stay honest.
    std::optional<std::vector<Word>> words;
    for (; !words; ++t) words = search_words(q + 1, t);
    for (const auto& w : *words) s.mats.push_back(word_matrix(w));
    s.two_l = s.mats.front().n;
  } else {
    // Period eight: C_0..C_8 on R^16 and B_0..B_p on R^m give
    // {C_i (x) I : i < 8} together with {C_8 (x) B_j}, i.e. q = p + 8 on R^(16m).
    const CliffordSystem base = build_clifford_system(8);
    const CliffordSystem tail = build_clifford_system(q - 8);
    const RatMatrix id = RatMatrix::identity(tail.two_l);
    for (int i = 0; i < 8; ++i) s.mats.push_back(kron(base.mats[i], id));
    for (const auto& B : tail.mats) s.mats.push_back(kron(base.mats[8], B));
    s.two_l = 16 * tail.two_l;
  }
  const CliffordCheck check = verify_clifford_system(s);
  if (!check.ok) throw std::logic_error("build_clifford_system: " + check.violation);
  return s;
}

nlohmann::ordered_json clifford_to_json(const CliffordSystem& s) {
  nlohmann::ordered_json j;
  j["q"] = s.q;
  j["two_l"] = s.two_l;
  auto mats = nlohmann::ordered_json::array();
  for (const auto& A : s.mats) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < A.n; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int j2 = 0; j2 < A.n; ++j2) row.push_back(A(i, j2).get_str());
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j["mats"] = std::move(mats);
  return j;
}

}  // namespace mincone
