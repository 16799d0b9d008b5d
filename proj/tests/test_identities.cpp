#include <cmath>

#include "doctest.h"
#include "mincone/catalog.hpp"
#include "mincone/identities.hpp"
#include "test_util.hpp"

using namespace mincone;

namespace {

CubicForm dim3() { return build_catalog_form("dim3"); }

CubicForm sum_of_cubes() {
  CubicForm u(2);
  u.add_term(0, 0, 0, Surd(1));
  u.add_term(1, 1, 1, Surd(1));
  return u;
}

IdentityOptions exact() {
  IdentityOptions o;
  o.mode = Mode::Exact;
  return o;
}

IdentityOptions randomized(std::uint64_t seed = 3) {
  IdentityOptions o;
  o.mode = Mode::Random;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("harmonicity") {
  CHECK_FALSE(check_harmonic(trivial_cubic(3, Surd(1))));
  CHECK(check_harmonic(dim3()));
  CHECK(trivial_cubic(3, Surd(1)).laplacian() == Poly::var(0) * Surd(6));
}

TEST_CASE("radial equation") {
  for (int n : {1, 3}) {
    const IdentityResult r = check_radial(trivial_cubic(n, Surd(1)), exact());
    CHECK(r.pass);
    CHECK(*r.constant == Surd(0));
  }
  const IdentityResult d = check_radial(dim3(), exact());
  CHECK(d.pass);
  CHECK(*d.constant == Surd(-8));
  CHECK(d.mode == "exact");
  CHECK(d.error_bound == 0.0);
  // Residual of x^3 + y^3 is 54xy(x^3 + y^3), not a multiple of (x^2+y^2)(x^3+y^3).
  CHECK(radial_lhs(sum_of_cubes()) ==
        Poly::var(0) * Poly::var(1) * sum_of_cubes().to_poly() * Surd(54));
  CHECK_FALSE(check_radial(sum_of_cubes(), exact()).pass);
  CHECK_FALSE(check_radial(sum_of_cubes(), randomized()).pass);
  CHECK_THROWS_AS(check_radial(CubicForm(3)), InvalidInput);
}

TEST_CASE("randomized radial test reports its error bound") {
  const IdentityResult r = check_radial(dim3(), randomized());
  CHECK(r.pass);
  CHECK(*r.constant == Surd(-8));
  CHECK(r.mode == "random");
  CHECK(r.error_bound <= std::pow(5e-6, 20) * (1 + 1e-9));
  CHECK(r.error_bound > 0.0);
  IdentityOptions tiny = randomized();
  tiny.bound = 5;
  CHECK_THROWS_AS(check_radial(dim3(), tiny), InvalidInput);
}

TEST_CASE("exact and randomized modes agree") {
  for (const auto& name : {"dim3", "clifford-q1", "clifford-q2", "cartan-d1", "cartan-d2",
                           "involution-d2", "complexified-d1", "albert21"}) {
    const CubicForm u = build_catalog_form(name);
    const IdentityResult e = check_radial(u, exact()), r = check_radial(u, randomized());
    REQUIRE(e.pass);
    REQUIRE(r.pass);
    CHECK_MESSAGE(*e.constant == *r.constant, name);
    CHECK(trace_identity_cubic(u, exact()).constant == trace_identity_cubic(u, randomized()).constant);
    CHECK(trace_identity_quadratic(u, exact()).pass == trace_identity_quadratic(u, randomized()).pass);
  }
}

TEST_CASE("eiconal equation") {
  const IdentityResult c = check_eiconal(cartan_cubic(1), exact());
  REQUIRE(c.pass);
  CHECK(c.constant->sign() > 0);
  CHECK(eiconal_normalized_residual(cartan_cubic(1), c.constant->to_double(), 100, 4) < 1e-9);
  CHECK_FALSE(check_eiconal(dim3(), exact()).pass);
  CHECK_FALSE(check_eiconal(CubicForm(3)).pass);
  CHECK_THROWS_AS(eiconal_normalized_residual(cartan_cubic(1), 0.0, 10, 1), InvalidInput);
}

TEST_CASE("trace identities") {
  const IdentityResult q = trace_identity_quadratic(dim3(), exact());
  REQUIRE(q.pass);
  CHECK(*q.constant == Surd(8));
  CHECK_FALSE(trace_identity_quadratic(build_catalog_form("clifford-q1"), exact()).pass);
  const IdentityResult qc = trace_identity_quadratic(cartan_cubic(1), exact());
  REQUIRE(qc.pass);
  CHECK(qc.constant->sign() > 0);
  const IdentityResult a = trace_identity_cubic(dim3(), exact());
  REQUIRE(a.pass);
  CHECK(*a.constant == Surd(24));
  CHECK(*trace_identity_cubic(trivial_cubic(3, Surd(1)), exact()).constant == Surd(216));
  for (const auto& e : catalog_entries()) {
    CHECK_MESSAGE(trace_identity_cubic(build_catalog_form(e.name)).pass, e.name);
  }
}

TEST_CASE("classification") {
  const ClassificationRecord t = classify(trivial_cubic(3, Surd(1)));
  CHECK(t.label == "trivial");
  CHECK(t.is_trivial);
  CHECK(*t.radial_theta == Surd(0));
  CHECK(classify(build_catalog_form("clifford-q1")).label == "clifford-type");
  CHECK(classify(cartan_cubic(1)).label == "exceptional-or-mutant");
  CHECK(classify(dim3()).label == "exceptional-or-mutant");
  CHECK(classify(sum_of_cubes()).label == "not-eigencubic");
  CHECK(classify(CubicForm(2)).label == "not-eigencubic");
  const auto j = classification_to_json(classify(dim3()));
  CHECK(j["radial_theta"] == "-8");
  CHECK(j["quad_trace"] == "8");
}

TEST_CASE("mean curvature") {
  const CubicForm u = dim3();
  CHECK(std::abs(mean_curvature(u, {0, 1, 2})) < 1e-15);
  CHECK(mean_curvature(u, {1, 1, 0}) == doctest::Approx(-16.0 * std::pow(5.0, -1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(mean_curvature(u, {0, 0, 0}), InvalidInput);
  const ConeSample s = sample_cone(cartan_cubic(1), 200, 7);
  CHECK(s.points.size() == 200);
  CHECK(s.max_abs_curvature < 1e-6);
  for (const auto& p : s.points) {
    double r = 0;
    for (double v : p) r += v * v;
    CHECK(r == doctest::Approx(1.0));
  }
}

TEST_CASE("sampled points satisfy the radial equation in floating point") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> normal;
  for (const auto& name : {"dim3", "cartan-d2", "involution-d4", "albert21"}) {
    const CubicForm u = build_catalog_form(name);
    const double theta = check_radial(u).constant->to_double();
    const MetrisedAlgebra A(u);
    for (int t = 0; t < 20; ++t) {
      Eigen::VectorXd x(u.dim());
      for (int i = 0; i < u.dim(); ++i) x[i] = normal(rng);
      x.normalize();
      const Eigen::VectorXd g = 0.5 * A.multiply(x, x);
      const Eigen::MatrixXd L = A.mult_operator(x);
      const double lhs = g.squaredNorm() * L.trace() - g.dot(L * g);
      const double rhs = theta * u.eval(std::vector<double>(x.data(), x.data() + x.size()));
      const double scale = std::pow(u.max_abs_coefficient(), 3);
      CHECK(std::abs(lhs - rhs) < 1e-10 * scale * u.dim());
    }
  }
}

TEST_CASE("scale covariance of theta") {
  std::mt19937_64 rng(42);
  for (const auto& name : {"dim3", "cartan-d1", "involution-d2"}) {
    const CubicForm u = build_catalog_form(name);
    const Surd theta = *check_radial(u).constant;
    for (int k = 0; k < 3; ++k) {
      Rational t = testutil::rand_q(rng);
      if (sgn(t) == 0) t = 3;
      const Surd ts(t);
      CHECK(*check_radial(u.scaled(ts)).constant == ts * ts * theta);
    }
  }
}

TEST_CASE("orthogonal invariance of the label") {
  for (const auto& name : {"dim3", "clifford-q1", "cartan-d1", "trivial"}) {
    const CubicForm u = build_catalog_form(name);
    const SurdMat R = rational_rotation(u.dim(), 17);
    // R^T R = I exactly.
    for (int i = 0; i < u.dim(); ++i) {
      for (int j = 0; j < u.dim(); ++j) {
        Surd s(0);
        for (int k = 0; k < u.dim(); ++k) s += R[k][i] * R[k][j];
        CHECK(s == Surd(i == j ? 1 : 0));
      }
    }
    const CubicForm v = u.transformed(R);
    CHECK_FALSE(v == u);
    const ClassificationRecord a = classify(u), b = classify(v);
    CHECK_MESSAGE(a.label == b.label, name);
    CHECK(a.radial_theta == b.radial_theta);
  }
}

TEST_CASE("eiconal constant shows up in the algebra") {
  std::mt19937_64 rng(43);
  for (int d : {1, 2}) {
    const CubicForm u = cartan_cubic(d);
    const Surd kappa = *check_eiconal(u).constant;
    const MetrisedAlgebra A(u);
    for (int t = 0; t < 5; ++t) {
      const SurdVec x = testutil::rand_point(rng, u.dim());
      const SurdVec x2 = A.multiply(x, x);
      CHECK(inner(x2, x2) == Surd(4) * kappa * inner(x, x) * inner(x, x));
    }
  }
}

TEST_CASE("json reports") {
  const auto j = identity_to_json(check_radial(dim3(), exact()));
  CHECK(j["check"] == "radial");
  CHECK(j["pass"] == true);
  CHECK(j["constant"] == "-8");
  CHECK(j["mode"] == "exact");
  CHECK(j["error_bound"] == 0.0);
}
