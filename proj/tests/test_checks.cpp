#include "oscalg/checks.hpp"
#include "oscalg/oscillator.hpp"
#include "oscalg/sampling.hpp"

#include "doctest.h"

using namespace oscalg;

namespace {

Lambda random_lambda(SampleRng& rng, int n) {
  std::vector<Rat> v;
  Rat prev(0);
  for (int i = 0; i < n; ++i) {
    prev += Rat(rng.next_in(1, 9), rng.next_in(1, 9));
    v.push_back(prev);
  }
  return make_lambda(std::move(v));
}

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("jacobi holds on the oscillator family") {
  SampleRng rng(42);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      CheckReport r = check_jacobi(build_oscillator(random_lambda(rng, n)));
      CHECK(r.pass());
      CHECK(r.check == "jacobi");
    }
}

TEST_CASE("jacobi rejects non-antisymmetric input") {
  Basis b = make_basis({"x", "y"});
  BilinearMap p(b);
  p.add(0, 0, 1, Poly(1));
  CHECK_THROWS_AS(check_jacobi(p), std::invalid_argument);
}

TEST_CASE("jacobi violation is located with its residual") {
  // Corrupt [e1, ê1] from e0 to e1.
  Lambda l = make_lambda({Rat(1)});
  BilinearMap p = build_oscillator(l);
  p.set(2, 3, 1, Poly());
  p.set(3, 2, 1, Poly());
  p.set(2, 3, 2, Poly(1));
  p.set(3, 2, 2, Poly(-1));
  CheckReport r = check_jacobi(p);
  REQUIRE(!r.pass());
  REQUIRE(!r.violations.empty());
  const Violation& v = r.violations.front();
  CHECK(v.at == std::vector<int>{0, 2, 3});
  CHECK(v.residual == std::vector<Poly>{Poly(), Poly(), Poly(), Poly(1)});
  CHECK(v.identity == "jacobi");
  CHECK(v.residual_text == "ê1");
}

TEST_CASE("commutative nonassociative product is caught") {
  Basis b = oscillator_basis(1);
  BilinearMap p(b);
  p.add(0, 0, 1, Poly(1));  // first squared = central
  p.add(1, 1, 0, Poly(1));  // central squared = first
  CheckReport r = check_assoc_comm(p);
  REQUIRE(!r.pass());
  const Violation& v = r.violations.front();
  CHECK(v.identity == "associator");
  CHECK(v.at == std::vector<int>{0, 0, 1});
  CHECK(v.residual == std::vector<Poly>{Poly(1), Poly(), Poly(), Poly()});

  BilinearMap noncomm(b);
  noncomm.add(0, 1, 0, Poly(1));
  CheckReport r2 = check_assoc_comm(noncomm);
  REQUIRE(!r2.pass());
  CHECK(r2.violations.front().identity == "commutator");
}

TEST_CASE("poisson compatibility holds for the family, symbolically in c") {
  for (int n = 1; n <= 2; ++n) {
    Lambda l = n == 1 ? make_lambda({Rat(1)}) : make_lambda({Rat(1), Rat(3)});
    CheckReport r = check_poisson(build_oscillator(l),
                                  poisson_product(n, Poly::variable("c")));
    CHECK(r.pass());
    CHECK(r.precondition_ok);
  }
}

TEST_CASE("poisson counterexample: central idempotent breaks the rule") {
  Lambda l = make_lambda({Rat(1)});
  BilinearMap circ(oscillator_basis(1));
  circ.add(1, 1, 1, Poly(1));  // e0*e0 = e0
  CheckReport r = check_poisson(build_oscillator(l), circ);
  REQUIRE(!r.pass());
  CHECK(r.precondition_ok);  // both structures are fine on their own
  REQUIRE(r.violations.size() == 4);
  const Violation& v = r.violations.front();
  CHECK(v.at == std::vector<int>{2, 1, 3});
  CHECK(v.residual == std::vector<Poly>{Poly(), Poly(1), Poly(), Poly()});
  CHECK(r.violations[1].at == std::vector<int>{2, 3, 1});
  CHECK(r.violations[2].at == std::vector<int>{3, 1, 2});
  CHECK(r.violations[3].at == std::vector<int>{3, 2, 1});
}

TEST_CASE("poisson precondition failures are reported, not thrown") {
  Basis b = make_basis({"x", "y"});
  BilinearMap bracket(b);
  bracket.add(0, 1, 1, Poly(1));
  bracket.add(1, 0, 1, Poly(-1));
  BilinearMap circ(b);
  circ.add(0, 1, 0, Poly(1));  // not commutative
  CheckReport r = check_poisson(bracket, circ);
  CHECK(!r.precondition_ok);
  CHECK(!r.pass());
  CHECK(r.precondition_note.find("commutative") != std::string::npos);
}

TEST_CASE("symmetric leibniz passes for the family and localizes failures") {
  Lambda l = make_lambda({Rat(1), Rat(3)});
  CHECK(check_symmetric_leibniz(leibniz_product(l, Poly::variable("c"))).pass());

  Basis b = make_basis({"x", "y"});
  BilinearMap p(b);
  p.add(0, 0, 0, Poly(1));  // x*x = x is not Leibniz
  CheckReport r = check_symmetric_leibniz(p);
  REQUIRE(!r.pass());
  const Violation& v = r.violations.front();
  CHECK(v.identity == "left-leibniz");
  CHECK(v.at == std::vector<int>{0, 0, 0});
  CHECK(v.residual == std::vector<Poly>{Poly(-1), Poly()});
}

TEST_CASE("form invariance in both modes") {
  Lambda l = make_lambda({Rat(1), Rat(2)});
  BilinearForm k = build_k_lambda(l);
  CHECK(check_form_invariance(k, build_oscillator(l), InvarianceMode::bracket).pass());
  CHECK(check_form_invariance(k, leibniz_product(l, Poly::variable("c")),
                              InvarianceMode::product)
            .pass());

  // The flat form is not invariant for the bracket.
  Lambda l1 = make_lambda({Rat(1)});
  BilinearForm flat(oscillator_basis(1), MatQ::identity(4), FormSymmetry::symmetric);
  CheckReport r =
      check_form_invariance(flat, build_oscillator(l1), InvarianceMode::bracket);
  REQUIRE(!r.pass());
  CHECK(r.check == "form_invariance_bracket");
  const Violation& v = r.violations.front();
  CHECK(v.at == std::vector<int>{2, 0, 3});
  CHECK(v.residual == std::vector<Poly>{Poly(-1)});
}

}  // TEST_SUITE
