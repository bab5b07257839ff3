#include "oscalg/geometry.hpp"

#include <stdexcept>

namespace oscalg {

namespace {

MatP mat_scaled(const MatP& m, const Poly& s) {
  MatP out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j) * s;
  return out;
}

// Matrices of nabla_{b_i} acting on coefficient columns, one per basis index.
std::vector<MatP> direction_matrices(const ConnectionAlg& conn) {
  const int d = conn.dim();
  std::vector<MatP> mats;
  mats.reserve(d);
  for (int i = 0; i < d; ++i)
    mats.push_back(conn.coeffs.left_mul_matrix(basis_vector(d, i)));
  return mats;
}

std::vector<Rat> flatten(const MatQ& m) {
  std::vector<Rat> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

MatQ unflatten(const std::vector<Rat>& v, int d) {
  MatQ m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * d + j];
  return m;
}

}  // namespace

ConnectionAlg canonical_connection(const BilinearMap& bracket) {
  if (!bracket.is_antisymmetric())
    throw std::invalid_argument("canonical connection needs an antisymmetric bracket");
  return ConnectionAlg{bracket.scaled(Rat(1, 2))};
}

ConnectionAlg shifted_canonical_connection(const BilinearMap& bracket,
                                           const BilinearMap& circ) {
  if (!circ.is_commutative())
    throw std::invalid_argument("connection shift must be a commutative product");
  ConnectionAlg base = canonical_connection(bracket);
  return ConnectionAlg{base.coeffs + circ};
}

BilinearMap torsion(const ConnectionAlg& conn, const BilinearMap& bracket) {
  if (conn.basis() != bracket.basis())
    throw std::invalid_argument("torsion: basis mismatch");
  return conn.coeffs - conn.coeffs.swapped_args() - bracket;
}

CurvatureTensor::CurvatureTensor(Basis basis) : basis_(std::move(basis)) {
  const int d = basis_.dim();
  upper_.assign(static_cast<std::size_t>(d) * (d - 1) / 2, MatP(d, d));
}

int CurvatureTensor::pair_index(int i, int j) const {
  const int d = basis_.dim();
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

MatP CurvatureTensor::operator()(int i, int j) const {
  const int d = basis_.dim();
  if (i < 0 || j < 0 || i >= d || j >= d)
    throw std::out_of_range("curvature argument out of range");
  if (i == j) return MatP(d, d);
  if (i < j) return upper_[pair_index(i, j)];
  return mat_scaled(upper_[pair_index(j, i)], Poly(Rat(-1)));
}

void CurvatureTensor::set_pair(int i, int j, MatP m) {
  if (!(0 <= i && i < j && j < basis_.dim()))
    throw std::invalid_argument("curvature pair must satisfy i < j");
  if (m.rows() != basis_.dim() || m.cols() != basis_.dim())
    throw std::invalid_argument("curvature matrix shape mismatch");
  upper_[pair_index(i, j)] = std::move(m);
}

bool CurvatureTensor::is_zero() const {
  for (const MatP& m : upper_)
    if (!m.is_zero()) return false;
  return true;
}

CurvatureTensor curvature(const ConnectionAlg& conn, const BilinearMap& bracket) {
  if (conn.basis() != bracket.basis())
    throw std::invalid_argument("curvature: basis mismatch");
  const int d = conn.dim();
  const std::vector<MatP> L = direction_matrices(conn);

  CurvatureTensor R(conn.basis());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatP m = L[i] * L[j] - L[j] * L[i];
      for (const auto& [k, c] : bracket.pair_row(i, j)) m = m - mat_scaled(L[k], c);
      R.set_pair(i, j, std::move(m));
    }
  return R;
}

std::vector<CurvatureDerivativeEntry> covariant_derivative_R(const ConnectionAlg& conn,
                                                             const CurvatureTensor& R) {
  if (conn.basis() != R.basis())
    throw std::invalid_argument("covariant derivative: basis mismatch");
  const int d = conn.dim();
  const std::vector<MatP> L = direction_matrices(conn);

  // Cache every R(i, j) once; the accessor copies.
  std::vector<MatP> rm(static_cast<std::size_t>(d) * d, MatP(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) rm[static_cast<std::size_t>(i) * d + j] = R(i, j);
  auto r_at = [&](int i, int j) -> const MatP& {
    return rm[static_cast<std::size_t>(i) * d + j];
  };

  std::vector<CurvatureDerivativeEntry> out;
  for (int x = 0; x < d; ++x) {
    // nabla_x applied to each curvature slot: x acts on the operator and, with
    // a minus sign, on each of the two arguments.
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) {
        MatP m = L[x] * r_at(u, v) - r_at(u, v) * L[x];
        for (const auto& [k, c] : conn.coeffs.pair_row(x, u)) m = m - mat_scaled(r_at(k, v), c);
        for (const auto& [k, c] : conn.coeffs.pair_row(x, v)) m = m - mat_scaled(r_at(u, k), c);
        if (m.is_zero()) continue;
        for (int w = 0; w < d; ++w) {
          std::vector<Poly> col(d);
          bool nonzero = false;
          for (int k = 0; k < d; ++k) {
            col[k] = m.at(k, w);
            nonzero = nonzero || !col[k].is_zero();
          }
          if (nonzero) out.push_back({x, u, v, w, std::move(col)});
        }
      }
  }
  return out;
}

bool is_locally_symmetric(const ConnectionAlg& conn, const CurvatureTensor& R) {
  return covariant_derivative_R(conn, R).empty();
}

std::vector<std::vector<Rat>> holonomy_span(const ConnectionAlg& conn,
                                            const CurvatureTensor& R) {
  if (!is_locally_symmetric(conn, R))
    throw std::invalid_argument(
        "holonomy span via curvature closure needs a parallel curvature tensor");
  const int d = conn.dim();

  std::vector<std::vector<Rat>> gens;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatP m = R(i, j);
      if (m.is_zero()) continue;
      if (!mat_is_constant(m))
        throw std::invalid_argument("holonomy span needs constant curvature operators");
      gens.push_back(flatten(mat_to_scalar(m)));
    }

  std::vector<std::vector<Rat>> basis = rref_span(gens);
  for (;;) {
    std::vector<std::vector<Rat>> fresh;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        MatQ A = unflatten(basis[a], d);
        MatQ B = unflatten(basis[b], d);
        std::vector<Rat> c = flatten(A * B - B * A);
        if (!in_span(basis, c) && !in_span(fresh, c)) fresh.push_back(c);
      }
    if (fresh.empty()) break;
    std::vector<std::vector<Rat>> all = basis;
    all.insert(all.end(), fresh.begin(), fresh.end());
    basis = rref_span(all);
  }
  return basis;
}

std::vector<FormDerivativeEntry> metric_compat_residual(const ConnectionAlg& conn,
                                                        const BilinearForm& form) {
  if (conn.basis() != form.basis())
    throw std::invalid_argument("metric compatibility: basis mismatch");
  const int d = conn.dim();

  std::vector<FormDerivativeEntry> out;
  for (int x = 0; x < d; ++x)
    for (int u = 0; u < d; ++u) {
      const std::vector<Poly> xu = conn.coeffs.apply_pair(x, u);
      for (int v = 0; v < d; ++v) {
        Poly t;
        for (int k = 0; k < d; ++k) {
          if (!xu[k].is_zero()) t = t - xu[k] * Poly(form.at(k, v));
          const Poly& xv = conn.coeffs.coeff(x, v, k);
          if (!xv.is_zero()) t = t - Poly(form.at(u, k)) * xv;
        }
        if (!t.is_zero()) out.push_back({x, u, v, std::move(t)});
      }
    }
  return out;
}

}  // namespace oscalg
