#include "doctest.h"
#include "mincone/algebra.hpp"
#include "mincone/catalog.hpp"
#include "mincone/identities.hpp"
#include "mincone/jordan.hpp"
#include "test_util.hpp"

using namespace mincone;

namespace {

Poly x(int i) { return Poly::var(i); }

CubicForm dim3() { return clifford_cubic(build_clifford_system(0)); }

std::vector<std::string> all_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

}  // namespace

TEST_CASE("poly engine") {
  const Poly p = (x(0) + x(1)) * (x(0) + x(1)) - x(0) * x(0) - Poly(2) * x(0) * x(1) - x(1) * x(1);
  CHECK(exact_zero(p));
  CHECK_FALSE(exact_zero(x(0) - x(1)));
  const Poly q = x(0) * x(0) * x(2) * Surd(3);
  CHECK(q.derivative(0) == x(0) * x(2) * Surd(6));
  CHECK(q.derivative(1).is_zero());
  CHECK(q.degree() == 3);
  CHECK(q.var_bound() == 3);
  CHECK(Poly().degree() == -1);
  CHECK(q.evaluate(std::vector<Surd>{Surd(2), Surd(5), Surd(7)}) == Surd(84));
  CHECK(Poly::key_vars(Poly::make_key({4, 1, 4})) == std::vector<int>{1, 4, 4});
  CHECK(Poly::key_mul(Poly::make_key({3}), Poly::make_key({1, 5})) == Poly::make_key({1, 3, 5}));
  Poly big = x(0);
  for (int k = 0; k < 7; ++k) big *= x(0);
  CHECK_THROWS_AS(big * x(1), InvalidInput);
  CHECK_THROWS_AS(x(0) / x(1), InvalidInput);
  CHECK(x(0) / Poly(2) == x(0) * Surd(Rational(1, 2)));
}

TEST_CASE("eval") {
  const CubicForm u = dim3();
  CHECK(u.eval(std::vector<Surd>{1, 2, 1}) == Surd(3));
  std::mt19937_64 rng(31);
  for (const auto& name : all_names()) {
    const CubicForm v = build_catalog_form(name);
    CHECK(v.eval(SurdVec(v.dim())).is_zero());
    SurdVec p = testutil::rand_point(rng, v.dim()), p2 = p;
    for (auto& s : p2) s *= Surd(2);
    CHECK(v.eval(p2) == Surd(8) * v.eval(p));
  }
  CHECK_THROWS_AS(u.eval(std::vector<Surd>{1, 2}), InvalidInput);
}

TEST_CASE("gradient and hessian") {
  const CubicForm cube = trivial_cubic(3, Surd(1));
  const auto g = cube.gradient();
  CHECK(g[0] == x(0) * x(0) * Surd(3));
  CHECK(g[1].is_zero());
  CHECK(g[2].is_zero());
  const auto H = dim3().hessian();
  CHECK(H[0][0].is_zero());
  CHECK(H[0][1] == x(1) * Surd(2));
  CHECK(H[0][2] == x(2) * Surd(-2));
  CHECK(H[1][1] == x(0) * Surd(2));
  CHECK(H[1][2].is_zero());
  CHECK(H[2][2] == x(0) * Surd(-2));
  CHECK(H[1][0] == H[0][1]);
}

TEST_CASE("Euler identity for every catalog form") {
  for (const auto& name : all_names()) {
    const CubicForm u = build_catalog_form(name);
    const auto g = u.gradient();
    Poly euler;
    for (int i = 0; i < u.dim(); ++i) euler += x(i) * g[i];
    CHECK_MESSAGE(exact_zero(euler - u.to_poly() * Surd(3)), name);
  }
}

TEST_CASE("polarization") {
  const CubicForm u = dim3();
  CHECK(u.polarize(testutil::basis_vec(3, 0), testutil::basis_vec(3, 1), testutil::basis_vec(3, 1)) ==
        Surd(2));
  std::mt19937_64 rng(32);
  for (const auto& name : {"dim3", "cartan-d1", "involution-d2", "albert21"}) {
    const CubicForm v = build_catalog_form(name);
    const SurdVec a = testutil::rand_point(rng, v.dim()), b = testutil::rand_point(rng, v.dim()),
                  c = testutil::rand_point(rng, v.dim());
    CHECK(v.polarize(a, a, a) == Surd(6) * v.eval(a));
    const Surd p = v.polarize(a, b, c);
    CHECK(v.polarize(a, c, b) == p);
    CHECK(v.polarize(b, a, c) == p);
    CHECK(v.polarize(b, c, a) == p);
    CHECK(v.polarize(c, a, b) == p);
    CHECK(v.polarize(c, b, a) == p);
  }
}

TEST_CASE("randomized zero test") {
  const ZeroTest nz = random_zero(x(0) - x(1), 2, 20, 1000000, 5);
  CHECK_FALSE(nz.zero);
  REQUIRE(nz.witness.size() == 2);
  CHECK(nz.witness[0] != nz.witness[1]);
  // Degree-5 radial residual of the dim-3 form with theta = -8.
  const CubicForm u = dim3();
  const Poly residual = radial_lhs(u) + squared_radius(3) * u.to_poly() * Surd(8);
  CHECK(residual.degree() == -1);
  const Poly unsimplified = radial_lhs(u);
  CHECK(unsimplified.degree() == 5);
  const ZeroTest z = random_zero(residual, 3, 20, 1000000, 9);
  CHECK(z.zero);
  CHECK(z.error_bound == 0.0);  // the zero polynomial has degree < 1
  const Poly wrong = radial_lhs(u) + squared_radius(3) * u.to_poly() * Surd(7);
  CHECK_FALSE(random_zero(wrong, 3, 20, 1000000, 9).zero);
  const ZeroTest z2 = random_zero(wrong - wrong, 3, 20, 1000000, 9);
  CHECK(z2.zero);
  CHECK_THROWS_AS(random_zero(wrong, 3, 20, 5, 9), InvalidInput);
}

TEST_CASE("randomized and exact zero tests agree on random sparse polynomials") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> var(0, 7), coef(-5, 5), deg(0, 2), len(1, 4);
  auto rand_poly = [&](int max_deg) {
    Poly p;
    for (int t = 0; t < len(rng); ++t) {
      std::vector<int> vars;
      const int dd = std::uniform_int_distribution<int>(0, max_deg)(rng);
      for (int k = 0; k < dd; ++k) vars.push_back(var(rng));
      p += Poly::monomial(vars, Surd(coef(rng)));
    }
    return p;
  };
  int zeros = 0;
  for (int t = 0; t < 100; ++t) {
    const Poly a = rand_poly(2), b = rand_poly(3);
    // Half the cases are identically zero after expansion.
    const Poly p = (t % 2 == 0) ? a * b - b * a : a * b + rand_poly(deg(rng) + 3);
    const bool exact = exact_zero(p);
    zeros += exact;
    CHECK(exact == random_zero(p, 8, 20, 1000000, static_cast<std::uint64_t>(t)).zero);
  }
  CHECK(zeros >= 50);
}

TEST_CASE("named constructors") {
  CHECK(trivial_cubic(1, Surd(1)).to_poly() == x(0) * x(0) * x(0));
  CHECK(trivial_cubic(4, Surd(5)).eval(testutil::basis_vec(4, 0)) == Surd(5));
  CHECK(dim3().to_poly() == x(0) * (x(1) * x(1) - x(2) * x(2)));
  const CubicForm q1 = clifford_cubic(build_clifford_system(1));
  CHECK(q1.dim() == 4);
  CHECK(q1.to_poly() == x(0) * (x(2) * x(2) - x(3) * x(3)) + Poly(2) * x(1) * x(2) * x(3));
  const int cartan_dims[] = {5, 8, 14, 26};
  const int cplx_dims[] = {12, 18, 30, 54};
  int k = 0;
  for (int d : {1, 2, 4, 8}) {
    CHECK(cartan_cubic(d).dim() == cartan_dims[k]);
    CHECK(complexified_cubic(d).dim() == cplx_dims[k]);
    ++k;
  }
  CHECK(involution_cubic(2).dim() == 9);
  CHECK(involution_cubic(4).dim() == 15);
  CHECK(involution_cubic(8).dim() == 27);
  CHECK(albert_contraction_cubic().dim() == 21);
  CHECK(octonion_cubic21().dim() == 21);
  CHECK_THROWS_AS(cartan_cubic(3), InvalidInput);
  CHECK_THROWS_AS(involution_cubic(1), InvalidInput);
  CHECK_THROWS_AS(build_catalog_form("nonsense"), InvalidInput);
}

TEST_CASE("Cartan cubic is half the generic norm on trace-free matrices") {
  std::mt19937_64 rng(34);
  const Surd inv_sqrt3(Rational(0), Rational(1, 3));
  for (int d : {1, 2, 4}) {
    const CubicForm u = cartan_cubic(d);
    const SurdVec p = testutil::rand_point(rng, u.dim());
    HermMat3<Surd> z(d);
    z.diag = {p[0] + p[1] * inv_sqrt3, Surd(-2) * p[1] * inv_sqrt3, -p[0] + p[1] * inv_sqrt3};
    for (int slot = 0; slot < 3; ++slot) {
      for (int j = 0; j < d; ++j) z.off[slot][j] = p[2 + slot * d + j];
    }
    CHECK(u.eval(p) == freudenthal_det(z) * Surd(Rational(1, 2)));
    CHECK(u.eval(p) == trace_form(z, jordan_mul(z, z)) * Surd(Rational(1, 6)));
  }
  CHECK_FALSE(cartan_cubic(1).is_rational());
}

TEST_CASE("octonion cubic") {
  const CubicForm u = octonion_cubic21();
  SurdVec p(21);
  p[0] = 1;       // w1 = e1
  p[7 + 1] = 1;   // w2 = e2
  p[14 + 2] = 1;  // w3 = e3
  CHECK(u.eval(p) == Surd(-1));
  std::mt19937_64 rng(35);
  SurdVec r = testutil::rand_point(rng, 21);
  for (int k = 0; k < 7; ++k) r[k] = r[7 + k];
  CHECK(u.eval(r).is_zero());
  for (const auto& [idx, c] : u.terms()) CHECK(c.is_rational());
}

TEST_CASE("Albert contraction equals the octonion cubic") {
  const CubicForm a = albert_contraction_cubic(), o = octonion_cubic21();
  CHECK(a == o);
  std::mt19937_64 rng(36);
  for (int t = 0; t < 10; ++t) {
    const SurdVec p = testutil::rand_point(rng, 21);
    CHECK(a.eval(p) == o.eval(p));
  }
}

TEST_CASE("harmonic unless trivial") {
  for (const auto& name : all_names()) {
    const bool h = check_harmonic(build_catalog_form(name));
    CHECK_MESSAGE(h == (name != "trivial"), name);
  }
}

TEST_CASE("JSON round trip") {
  for (const auto& name : all_names()) {
    const CubicForm u = build_catalog_form(name);
    const CubicForm back = cubic_from_json(nlohmann::json::parse(cubic_to_json_string(u)));
    CHECK_MESSAGE(back == u, name);
    CHECK(back.variables() == u.variables());
    CHECK(cubic_to_json_string(back) == cubic_to_json_string(u));
  }
  const auto j = cubic_to_json(dim3());
  CHECK(j["dim"] == 3);
  CHECK(j["terms"][0]["ijk"] == nlohmann::json::array({1, 2, 2}));
  CHECK(j["terms"][0]["c"] == "1");
  CHECK(j["terms"][1]["c"] == "-1");
}

TEST_CASE("JSON rejects malformed input") {
  using nlohmann::json;
  CHECK_THROWS_AS(cubic_from_json(json::parse(R"({"terms": []})")), InvalidInput);
  CHECK_THROWS_AS(cubic_from_json(json::parse(R"({"dim": 0, "terms": []})")), InvalidInput);
  CHECK_THROWS_AS(cubic_from_json(json::parse(R"({"dim": 2, "terms": [{"ijk": [1,2,3], "c": "1"}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(cubic_from_json(json::parse(R"({"dim": 2, "terms": [{"ijk": [1,2,2], "c": "x"}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(cubic_from_json(json::parse(R"({"dim": 2, "terms": [{"ijk": [1,2,2], "c": 0.5}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(cubic_from_json(json::parse(
                      R"({"dim": 2, "terms": [{"ijk": [1,2,2], "c": "1"}, {"ijk": [2,1,2], "c": "1"}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(cubic_from_json(json::parse(R"({"dim": 2, "terms": [{"ijk": [1,2], "c": "1"}]})")),
                  InvalidInput);
  const CubicForm ok = cubic_from_json(json::parse(
      R"J({"dim": 2, "terms": [{"ijk": [2,1,1], "c": "3/6"}, {"ijk": [2,2,2], "c": "1/3+2*sqrt(3)"}]})J"));
  CHECK(ok.coefficient(0, 0, 1) == Surd(Rational(1, 2)));
  CHECK(ok.coefficient(1, 1, 1) == Surd(Rational(1, 3), Rational(2)));
}

TEST_CASE("poly round trip and linear substitution") {
  for (const auto& name : {"dim3", "cartan-d2", "complexified-d1"}) {
    const CubicForm u = build_catalog_form(name);
    CHECK(CubicForm::from_poly(u.to_poly(), u.dim()) == u);
    SurdMat id(u.dim(), SurdVec(u.dim()));
    for (int i = 0; i < u.dim(); ++i) id[i][i] = 1;
    CHECK(u.transformed(id) == u);
  }
  CHECK_THROWS_AS(CubicForm::from_poly(x(0) * x(1), 2), InvalidInput);
}
