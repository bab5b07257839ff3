#include "oscalg/linsolve.hpp"
#include "oscalg/sampling.hpp"

#include "doctest.h"

using namespace oscalg;

namespace {

MatQ make_mat(int r, int c, std::initializer_list<int> vals) {
  MatQ m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

MatQ random_mat(SampleRng& rng, int r, int c) {
  MatQ m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.rational(-5, 5, 1, 3);
  return m;
}

}  // namespace

TEST_SUITE("linsolve") {

TEST_CASE("rref normalizes and reports pivots") {
  RrefResult r = rref(make_mat(2, 2, {1, 1, 2, 2}));
  CHECK(r.rank() == 1);
  CHECK(r.pivot_cols == std::vector<int>{0});
  CHECK(r.m.at(0, 0) == 1);
  CHECK(r.m.at(0, 1) == 1);
  CHECK(r.m.at(1, 0) == 0);
  CHECK(r.m.at(1, 1) == 0);

  CHECK(rank(MatQ::identity(4)) == 4);
  CHECK(rank(MatQ(3, 5)) == 0);
}

TEST_CASE("solve_linear on a rank-deficient consistent system") {
  MatQ a = make_mat(2, 2, {1, 1, 2, 2});
  auto sol = solve_linear(a, {Rat(1), Rat(2)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular() == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(sol->dim() == 1);
  CHECK(rref_span(sol->basis()) == rref_span({{Rat(1), Rat(-1)}}));
  CHECK(sol->contains({Rat(0), Rat(1)}));
  CHECK(sol->contains({Rat(5), Rat(-4)}));
  CHECK(!sol->contains({Rat(0), Rat(0)}));
  CHECK(sol->param_names() == std::vector<std::string>{"t1"});
}

TEST_CASE("solve_linear detects inconsistency") {
  MatQ a = make_mat(2, 2, {1, 1, 2, 2});
  CHECK(!solve_linear(a, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("symbolic_point satisfies the system symbolically") {
  MatQ a = make_mat(2, 3, {1, 0, 2, 0, 1, -1});
  auto sol = solve_linear(a, {Rat(3), Rat(4)});
  REQUIRE(sol.has_value());
  std::vector<Poly> x = sol->symbolic_point();
  MatP ap = mat_to_poly(a);
  std::vector<Poly> ax = ap.apply(x);
  CHECK(ax[0] == Poly(3));
  CHECK(ax[1] == Poly(4));
}

TEST_CASE("rank plus nullity equals column count") {
  SampleRng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int r = static_cast<int>(rng.next_in(1, 6)), c = static_cast<int>(rng.next_in(1, 6));
    MatQ a = random_mat(rng, r, c);
    std::vector<Rat> zero(r, Rat(0));
    auto sol = solve_linear(a, zero);
    REQUIRE(sol.has_value());
    CHECK(rank(a) + sol->dim() == c);
    // Back-substitution: every basis vector solves Ax = 0.
    for (const auto& v : sol->basis()) {
      std::vector<Rat> av(r, Rat(0));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) av[i] += a.at(i, j) * v[j];
      for (const Rat& q : av) CHECK(q == 0);
    }
  }
}

TEST_CASE("solutions verify against constructed systems") {
  SampleRng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int r = static_cast<int>(rng.next_in(1, 5)), c = static_cast<int>(rng.next_in(1, 5));
    MatQ a = random_mat(rng, r, c);
    // Make the rhs reachable by construction.
    std::vector<Rat> x0(c);
    for (auto& q : x0) q = rng.rational();
    std::vector<Rat> b(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) b[i] += a.at(i, j) * x0[j];
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    CHECK(sol->contains(x0));
    std::vector<Rat> params(sol->dim());
    for (auto& q : params) q = rng.rational();
    std::vector<Rat> x = sol->point(params);
    std::vector<Rat> ax(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) ax[i] += a.at(i, j) * x[j];
    CHECK(ax == b);
  }
}

TEST_CASE("span helpers") {
  std::vector<std::vector<Rat>> vecs = {{Rat(2), Rat(0)}, {Rat(1), Rat(1)}, {Rat(3), Rat(1)}};
  auto basis = rref_span(vecs);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(basis[1] == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(rref_span(basis) == basis);  // idempotent
  CHECK(in_span(vecs, {Rat(7), Rat(-2)}));
  CHECK(in_span({}, {Rat(0), Rat(0)}));
  CHECK(!in_span({{Rat(1), Rat(0)}}, {Rat(0), Rat(1)}));
  CHECK(same_span(vecs, basis));
  CHECK(!same_span(vecs, {{Rat(1), Rat(0)}}));
}

}  // TEST_SUITE
