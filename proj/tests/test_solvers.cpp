#include "oscalg/oscillator.hpp"
#include "oscalg/sampling.hpp"
#include "oscalg/solvers.hpp"

#include "doctest.h"

using namespace oscalg;

namespace {

// Coordinates (in the symmetric-slot layout) of b_p* (.) b_q*.
std::vector<Rat> sym_unit(int dim, int p, int q) {
  std::vector<Rat> v(static_cast<std::size_t>(dim) * (dim + 1) / 2, Rat(0));
  v[sym_coord_index(dim, p, q)] = Rat(1);
  return v;
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("symmetric slot indexing is a bijection on the upper triangle") {
  for (int dim = 1; dim <= 6; ++dim) {
    std::vector<int> hits(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        int s = sym_coord_index(dim, i, j);
        CHECK(s == sym_coord_index(dim, j, i));
        ++hits[s];
      }
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("form and matrix coordinates round trip") {
  SampleRng rng(42);
  Basis b = make_basis({"p", "q", "r"});
  MatQ m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m.at(i, j) = m.at(j, i) = rng.rational();
  BilinearForm f(b, m, FormSymmetry::symmetric);
  CHECK(form_from_sym_coords(b, sym_coords_of_form(f)) == f);

  MatQ any(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) any.at(i, j) = rng.rational();
  CHECK(matrix_from_coords(3, matrix_coords(any)) == any);
}

TEST_CASE("invariant forms of the nonabelian line") {
  Basis b = make_basis({"x", "y"});
  BilinearMap br(b);
  br.add(0, 1, 1, Poly(1));
  br.add(1, 0, 1, Poly(-1));
  auto sol = invariant_symmetric_forms(br);
  CHECK(sol.dim() == 1);
  CHECK(same_span(sol.basis(), {sym_unit(2, 0, 0)}));
}

TEST_CASE("invariant forms of an abelian algebra fill the symmetric square") {
  Basis b = make_basis({"x", "y", "z"});
  BilinearMap br(b);
  CHECK(invariant_symmetric_forms(br).dim() == 6);
}

TEST_CASE("oscillator invariant forms: the two-dimensional span") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Rat> vals;
    for (int i = 1; i <= n; ++i) vals.push_back(Rat(2 * i - 1, 2));  // 1/2, 3/2, 5/2
    Lambda l = make_lambda(vals);
    auto sol = invariant_symmetric_forms(build_oscillator(l));
    CHECK(sol.dim() == 2);
    int d = 2 * n + 2;
    CHECK(same_span(sol.basis(),
                    {sym_coords_of_form(build_k_lambda(l)), sym_unit(d, 0, 0)}));
  }
}

TEST_CASE("solver rejects symbolic structure constants") {
  BilinearMap p(make_basis({"x", "y"}));
  p.add(0, 1, 1, Poly::variable("c"));
  p.add(1, 0, 1, -Poly::variable("c"));
  CHECK_THROWS_AS(invariant_symmetric_forms(p), std::invalid_argument);
  CHECK_THROWS_AS(derivations(p, {}), std::invalid_argument);
}

TEST_CASE("derivations of the abelian plane") {
  Basis b = make_basis({"x", "y"});
  BilinearMap p(b);
  auto all = derivations(p, {});
  CHECK(all.dim() == 4);
  auto constrained = derivations(p, {{Rat(1), Rat(0)}});  // J(x) = 0
  CHECK(constrained.dim() == 2);
  for (const auto& v : constrained.basis()) {
    MatQ j = matrix_from_coords(2, v);
    CHECK(j.at(0, 0) == 0);
    CHECK(j.at(1, 0) == 0);
    CHECK(is_derivation(p, j));
  }
}

TEST_CASE("derivations of the oscillator with central kernel") {
  SampleRng rng(5);
  for (int n = 1; n <= 3; ++n) {
    std::vector<Rat> vals;
    Rat prev(0);
    for (int i = 0; i < n; ++i) {
      prev += Rat(rng.next_in(1, 7), rng.next_in(1, 4));
      vals.push_back(prev);
    }
    Lambda l = make_lambda(vals);
    BilinearMap br = build_oscillator(l);
    int d = 2 * n + 2;
    std::vector<Rat> e0(d, Rat(0)), em1(d, Rat(0));
    e0[idx_e0()] = Rat(1);
    em1[idx_em1()] = Rat(1);
    auto sol = derivations(br, {e0, em1});
    CHECK(sol.dim() == n);
    for (const auto& v : sol.basis()) {
      MatQ j = matrix_from_coords(d, v);
      CHECK(is_derivation(br, j));
      // Every solution has the block-rotation shape: zero rows/columns on the
      // first two slots, and per mode i only the antidiagonal 2x2 block with
      // J(e_i) = m_i ê_i, J(ê_i) = -m_i e_i.
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          bool same_mode_offdiag =
              r >= 2 && c >= 2 && (r / 2 == c / 2) && r != c;
          if (!same_mode_offdiag) CHECK(j.at(r, c) == 0);
        }
      for (int i = 1; i <= n; ++i)
        CHECK(j.at(idx_ec(i), idx_e(i)) == -j.at(idx_e(i), idx_ec(i)));
    }
    // J^mu itself is reproduced.
    std::vector<Rat> mu;
    for (int i = 0; i < n; ++i) mu.push_back(rng.rational());
    MatQ jm(d, d);
    for (int i = 1; i <= n; ++i) {
      jm.at(idx_ec(i), idx_e(i)) = mu[i - 1];
      jm.at(idx_e(i), idx_ec(i)) = -mu[i - 1];
    }
    CHECK(is_derivation(br, jm));
    CHECK(sol.contains(matrix_coords(jm)));
  }
}

TEST_CASE("center and annihilator") {
  Lambda l = make_lambda({Rat(1), Rat(2)});
  BilinearMap br = build_oscillator(l);
  auto z = center(br);
  REQUIRE(z.size() == 1);
  std::vector<Rat> e0(6, Rat(0));
  e0[idx_e0()] = Rat(1);
  CHECK(same_span(z, {e0}));
  // For a bracket the annihilator coincides with the center.
  CHECK(same_span(annihilator(br), z));

  // x*x = x: trivial annihilator, trivial center forces the zero subspace.
  BilinearMap idem(make_basis({"x"}));
  idem.add(0, 0, 0, Poly(1));
  CHECK(annihilator(idem).empty());

  BilinearMap ab(make_basis({"x", "y"}));
  CHECK(annihilator(ab).size() == 2);
}

}  // TEST_SUITE
