#include "oscalg/solvers.hpp"

#include <stdexcept>

namespace oscalg {

namespace {

void require_scalar(const BilinearMap& p, const char* who) {
  if (!p.is_scalar())
    throw std::invalid_argument(std::string(who) + ": structure constants must be scalar");
}

Rat coeff_q(const BilinearMap& p, int i, int j, int k) {
  const Poly& c = p.coeff(i, j, k);
  return c.is_zero() ? Rat(0) : c.constant_value();
}

std::vector<std::vector<Rat>> nullspace_rref(const MatQ& A) {
  std::vector<Rat> b(A.rows(), Rat(0));
  auto sol = solve_linear(A, b);
  // homogeneous system, always consistent
  return rref_span(sol->basis());
}

}  // namespace

int sym_coord_index(int dim, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * dim - i * (i - 1) / 2 + (j - i);
}

std::vector<Rat> sym_coords_of_form(const BilinearForm& B) {
  const int d = B.basis().dim();
  std::vector<Rat> u(d * (d + 1) / 2, Rat(0));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) u[sym_coord_index(d, i, j)] = B.at(i, j);
  return u;
}

BilinearForm form_from_sym_coords(const Basis& basis, const std::vector<Rat>& u) {
  const int d = basis.dim();
  if ((int)u.size() != d * (d + 1) / 2)
    throw std::invalid_argument("form_from_sym_coords: wrong coordinate count");
  MatQ m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = u[sym_coord_index(d, i, j)];
  return BilinearForm(basis, m, FormSymmetry::symmetric);
}

std::vector<Rat> matrix_coords(const MatQ& m) {
  std::vector<Rat> u;
  u.reserve((size_t)m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) u.push_back(m.at(i, j));
  return u;
}

MatQ matrix_from_coords(int dim, const std::vector<Rat>& u) {
  if ((int)u.size() != dim * dim)
    throw std::invalid_argument("matrix_from_coords: wrong coordinate count");
  MatQ m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = u[i * dim + j];
  return m;
}

AffineSolutionSpace invariant_symmetric_forms(const BilinearMap& bracket) {
  require_scalar(bracket, "invariant_symmetric_forms");
  const int d = bracket.basis().dim();
  const int ncoord = d * (d + 1) / 2;
  //   B([b_a,b_b],b_c) + B(b_b,[b_a,b_c]) = 0  for all triples (a,b,c)
  MatQ A(d * d * d, ncoord);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        const int row = (a * d + b) * d + c;
        for (const auto& [k, coef] : bracket.pair_row(a, b))
          A.at(row, sym_coord_index(d, k, c)) += coef.constant_value();
        for (const auto& [k, coef] : bracket.pair_row(a, c))
          A.at(row, sym_coord_index(d, b, k)) += coef.constant_value();
      }
  std::vector<Rat> zero(A.rows(), Rat(0));
  auto sol = solve_linear(A, zero);
  return *sol;
}

AffineSolutionSpace derivations(const BilinearMap& product,
                                const std::vector<std::vector<Rat>>& kernel_constraints) {
  require_scalar(product, "derivations");
  const int d = product.basis().dim();
  for (const auto& v : kernel_constraints)
    if ((int)v.size() != d) throw std::invalid_argument("derivations: constraint vector size");

  // J(b_a·b_b) − (J b_a)·b_b − b_a·(J b_b) = 0, component m, unknown J[r][c]
  const int nrows = d * d * d + d * (int)kernel_constraints.size();
  MatQ A(nrows, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int m = 0; m < d; ++m) {
        const int row = (a * d + b) * d + m;
        for (int k = 0; k < d; ++k) A.at(row, m * d + k) += coeff_q(product, a, b, k);
        for (int p = 0; p < d; ++p) A.at(row, p * d + a) -= coeff_q(product, p, b, m);
        for (int q = 0; q < d; ++q) A.at(row, q * d + b) -= coeff_q(product, a, q, m);
      }
  int row = d * d * d;
  for (const auto& v : kernel_constraints) {
    for (int m = 0; m < d; ++m, ++row)
      for (int c = 0; c < d; ++c) A.at(row, m * d + c) = v[c];
  }
  std::vector<Rat> zero(A.rows(), Rat(0));
  auto sol = solve_linear(A, zero);
  return *sol;
}

bool is_derivation(const BilinearMap& product, const MatQ& J) {
  const int d = product.basis().dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int m = 0; m < d; ++m) {
        Poly r;
        for (int k = 0; k < d; ++k) r += Poly(J.at(m, k)) * product.coeff(a, b, k);
        for (int p = 0; p < d; ++p) r -= Poly(J.at(p, a)) * product.coeff(p, b, m);
        for (int q = 0; q < d; ++q) r -= Poly(J.at(q, b)) * product.coeff(a, q, m);
        if (!r.is_zero()) return false;
      }
  return true;
}

std::vector<std::vector<Rat>> center(const BilinearMap& product) {
  require_scalar(product, "center");
  const int d = product.basis().dim();
  // x·b_j − b_j·x = 0, component m, unknown x_i
  MatQ A(d * d, d);
  for (int j = 0; j < d; ++j)
    for (int m = 0; m < d; ++m)
      for (int i = 0; i < d; ++i)
        A.at(j * d + m, i) = coeff_q(product, i, j, m) - coeff_q(product, j, i, m);
  return nullspace_rref(A);
}

std::vector<std::vector<Rat>> annihilator(const BilinearMap& product) {
  require_scalar(product, "annihilator");
  const int d = product.basis().dim();
  // x·b_j = 0 and b_j·x = 0
  MatQ A(2 * d * d, d);
  for (int j = 0; j < d; ++j)
    for (int m = 0; m < d; ++m)
      for (int i = 0; i < d; ++i) {
        A.at(j * d + m, i) = coeff_q(product, i, j, m);
        A.at(d * d + j * d + m, i) = coeff_q(product, j, i, m);
      }
  return nullspace_rref(A);
}

}  // namespace oscalg
