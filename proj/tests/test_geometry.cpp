#include "oscalg/geometry.hpp"
#include "oscalg/oscillator.hpp"

#include "doctest.h"

using namespace oscalg;

namespace {

MatP mat_scaled(const MatP& m, const Poly& s) {
  MatP out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j) * s;
  return out;
}

std::vector<Rat> flat(const MatQ& m) {
  std::vector<Rat> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

MatQ unflat(const std::vector<Rat>& v, int d) {
  MatQ m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = v[(size_t)i * d + j];
  return m;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("connection constructors and torsion") {
  Lambda l1 = make_lambda({Rat(1)});
  BilinearMap br = build_oscillator(l1);
  ConnectionAlg c0 = canonical_connection(br);
  CHECK(c0.coeffs.coeff(0, 2, 3) == Poly(Rat(1, 2)));
  CHECK(c0.coeffs.coeff(2, 0, 3) == Poly(Rat(-1, 2)));
  CHECK(c0.coeffs.coeff(2, 3, 1) == Poly(Rat(1, 2)));
  CHECK(torsion(c0, br).is_zero());

  Poly c = Poly::variable("c");
  ConnectionAlg cd = shifted_canonical_connection(br, poisson_product(1, c));
  CHECK(cd.coeffs.coeff(0, 0, 1) == c);
  CHECK(cd.coeffs.coeff(0, 2, 3) == Poly(Rat(1, 2)));
  CHECK(torsion(cd, br).is_zero());

  // a plain left-multiplication connection has torsion equal to the bracket
  CHECK(torsion(ConnectionAlg{br}, br) == br);

  CHECK_THROWS_AS(canonical_connection(poisson_product(1, c)), std::invalid_argument);
  CHECK_THROWS_AS(shifted_canonical_connection(br, br), std::invalid_argument);
  BilinearMap other(make_basis({"x", "y"}));
  CHECK_THROWS_AS(torsion(c0, other), std::invalid_argument);
}

TEST_CASE("curvature closed form") {
  Lambda l1 = make_lambda({Rat(1)});
  BilinearMap br = build_oscillator(l1);
  ConnectionAlg c0 = canonical_connection(br);
  CurvatureTensor R = curvature(c0, br);

  // R(e-1, e1) e1 = 1/4 e0
  CHECK(R(0, 2).at(1, 2) == Poly(Rat(1, 4)));
  CHECK((R(2, 0) + R(0, 2)).is_zero());
  CHECK(R(1, 1).is_zero());
  CHECK_THROWS_AS(R(0, 4), std::out_of_range);

  // whole tensor: R(u, v) = -1/4 ad_{[u,v]}
  for (const Lambda& l : {l1, make_lambda({Rat(1), Rat(3)})}) {
    BilinearMap b2 = build_oscillator(l);
    CurvatureTensor R2 = curvature(canonical_connection(b2), b2);
    const int d = b2.dim();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        CHECK(R2(i, j) ==
              mat_scaled(b2.left_mul_matrix(b2.apply_pair(i, j)), Poly(Rat(-1, 4))));
  }
}

TEST_CASE("deformation leaves the curvature unchanged") {
  Poly c = Poly::variable("c");
  for (int n : {1, 2}) {
    Lambda l = n == 1 ? make_lambda({Rat(1)}) : make_lambda({Rat(1), Rat(3)});
    BilinearMap br = build_oscillator(l);
    ConnectionAlg c0 = canonical_connection(br);
    ConnectionAlg cd = shifted_canonical_connection(br, poisson_product(n, c));
    CHECK(curvature(cd, br) == curvature(c0, br));
  }
}

TEST_CASE("covariant derivative of curvature") {
  Poly c = Poly::variable("c");
  for (int n : {1, 2}) {
    Lambda l = n == 1 ? make_lambda({Rat(1)}) : make_lambda({Rat(1), Rat(3)});
    BilinearMap br = build_oscillator(l);
    ConnectionAlg c0 = canonical_connection(br);
    CurvatureTensor R = curvature(c0, br);
    CHECK(covariant_derivative_R(c0, R).empty());
    CHECK(is_locally_symmetric(c0, R));
    ConnectionAlg cd = shifted_canonical_connection(br, poisson_product(n, c));
    CHECK(is_locally_symmetric(cd, curvature(cd, br)));
  }

  // a connection that is not locally symmetric: [x,y] = y with nabla_y x = x
  BilinearMap br(make_basis({"x", "y"}));
  br.set(0, 1, 1, Poly(1));
  br.set(1, 0, 1, Poly(-1));
  BilinearMap cf(br.basis());
  cf.set(1, 0, 0, Poly(1));
  ConnectionAlg conn{cf};
  CurvatureTensor R = curvature(conn, br);
  CHECK(R(0, 1).at(0, 0) == Poly(-1));  // R(x,y)x = -x
  auto dR = covariant_derivative_R(conn, R);
  REQUIRE(dR.size() == 1);
  CHECK(dR[0].x == 1);
  CHECK(dR[0].u == 0);
  CHECK(dR[0].v == 1);
  CHECK(dR[0].w == 0);
  CHECK(dR[0].value == basis_vector(2, 0));  // (nabla R)(y; x, y) x = x
  CHECK(!is_locally_symmetric(conn, R));
  CHECK_THROWS_AS(holonomy_span(conn, R), std::invalid_argument);
}

TEST_CASE("holonomy span from curvature closure") {
  for (int n : {1, 2}) {
    Lambda l = n == 1 ? make_lambda({Rat(1)}) : make_lambda({Rat(1), Rat(3)});
    BilinearMap br = build_oscillator(l);
    ConnectionAlg c0 = canonical_connection(br);
    CurvatureTensor R = curvature(c0, br);
    std::vector<std::vector<Rat>> hol = holonomy_span(c0, R);
    CHECK((int)hol.size() == 2 * n);

    // second route: the span of ad on the symplectic block directions
    const int d = br.dim();
    std::vector<std::vector<Rat>> ads;
    for (int i = 2; i < d; ++i)
      ads.push_back(flat(mat_to_scalar(br.left_mul_matrix(basis_vector(d, i)))));
    CHECK(same_span(hol, ads));

    // the result is commutator-closed
    for (size_t a = 0; a < hol.size(); ++a)
      for (size_t b = a + 1; b < hol.size(); ++b) {
        MatQ A = unflat(hol[a], d), B = unflat(hol[b], d);
        CHECK(in_span(hol, flat(A * B - B * A)));
      }

    // the deformed connection has the same holonomy span
    ConnectionAlg cd = shifted_canonical_connection(br, poisson_product(n, Poly::variable("c")));
    CHECK(holonomy_span(cd, curvature(cd, br)) == hol);
  }

  // symbolic curvature operators are rejected
  Basis b = make_basis({"x", "y"});
  ConnectionAlg zero{BilinearMap(b)};
  CurvatureTensor R(b);
  MatP m(2, 2);
  m.at(0, 0) = Poly::variable("s");
  R.set_pair(0, 1, m);
  CHECK_THROWS_AS(holonomy_span(zero, R), std::invalid_argument);
}

TEST_CASE("metric compatibility residual") {
  Poly c = Poly::variable("c");
  for (int n : {1, 2}) {
    Lambda l = n == 1 ? make_lambda({Rat(1)}) : make_lambda({Rat(1), Rat(3)});
    BilinearMap br = build_oscillator(l);
    BilinearForm k = build_k_lambda(l);
    CHECK(metric_compat_residual(canonical_connection(br), k).empty());

    ConnectionAlg cd = shifted_canonical_connection(br, poisson_product(n, c));
    auto res = metric_compat_residual(cd, k);
    REQUIRE(res.size() == 1);
    CHECK(res[0].x == 0);
    CHECK(res[0].u == 0);
    CHECK(res[0].v == 0);
    CHECK(res[0].value == Poly(-2) * c);

    ConnectionAlg flat_shift = shifted_canonical_connection(br, poisson_product(n, Poly(0)));
    CHECK(metric_compat_residual(flat_shift, k).empty());
  }

  BilinearForm other(make_basis({"x"}), MatQ(1, 1), FormSymmetry::symmetric);
  Lambda l1 = make_lambda({Rat(1)});
  CHECK_THROWS_AS(
      metric_compat_residual(canonical_connection(build_oscillator(l1)), other),
      std::invalid_argument);
}

}  // TEST_SUITE
