#pragma once

// Left-invariant connections described by their value on the frame at the
// identity: curvature, covariant derivative of curvature, infinitesimal
// holonomy (curvature closure, valid when the curvature is parallel), and
// metric-compatibility residuals. Everything here is exact.

#include "oscalg/algebra.hpp"

namespace oscalg {

struct ConnectionAlg {
  BilinearMap coeffs;  // coeffs(u, v) = nabla_u v on left-invariant fields

  const Basis& basis() const { return coeffs.basis(); }
  int dim() const { return coeffs.dim(); }
};

/// Canonical torsion-free connection of a bi-invariant metric: nabla_u v = [u,v]/2.
ConnectionAlg canonical_connection(const BilinearMap& bracket);

/// Canonical connection shifted by a commutative product: [u,v]/2 + u.v.
/// Stays torsion-free because the shift is symmetric.
ConnectionAlg shifted_canonical_connection(const BilinearMap& bracket,
                                           const BilinearMap& circ);

/// T(u, v) = nabla_u v - nabla_v u - [u, v]; zero iff torsion-free.
BilinearMap torsion(const ConnectionAlg& conn, const BilinearMap& bracket);

/// R(b_i, b_j) stored as matrices over the strict upper triangle, skew in (i, j).
class CurvatureTensor {
 public:
  explicit CurvatureTensor(Basis basis);

  const Basis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }

  /// Matrix of w -> R(b_i, b_j) w acting on coefficient columns.
  MatP operator()(int i, int j) const;
  void set_pair(int i, int j, MatP m);  // requires i < j

  bool is_zero() const;
  bool operator==(const CurvatureTensor&) const = default;

 private:
  int pair_index(int i, int j) const;

  Basis basis_;
  std::vector<MatP> upper_;
};

/// R(u, v) w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_{[u,v]} w.
CurvatureTensor curvature(const ConnectionAlg& conn, const BilinearMap& bracket);

struct CurvatureDerivativeEntry {
  int x = 0;                // differentiation direction
  int u = 0, v = 0, w = 0;  // curvature arguments, u < v
  std::vector<Poly> value;  // coefficient vector of (nabla R)(x; u, v, w)
};

/// Nonzero components of nabla R, lexicographic in (x, u, v, w) with u < v.
std::vector<CurvatureDerivativeEntry> covariant_derivative_R(const ConnectionAlg& conn,
                                                             const CurvatureTensor& R);

/// True iff nabla R vanishes identically.
bool is_locally_symmetric(const ConnectionAlg& conn, const CurvatureTensor& R);

/// Span of the curvature operators closed under commutators, as an RREF basis
/// of row-major flattened dim x dim matrices. The closure computes the
/// infinitesimal holonomy only when the curvature is parallel, so inputs with
/// nonzero nabla R are rejected (std::invalid_argument), as are curvature
/// operators with symbolic entries.
std::vector<std::vector<Rat>> holonomy_span(const ConnectionAlg& conn,
                                            const CurvatureTensor& R);

struct FormDerivativeEntry {
  int x = 0, u = 0, v = 0;
  Poly value;
};

/// Nonzero components of (nabla form)(x; u, v) = -form(nabla_x u, v) - form(u, nabla_x v)
/// on left-invariant fields (the form itself is constant there). Empty iff the
/// connection is metric for the form.
std::vector<FormDerivativeEntry> metric_compat_residual(const ConnectionAlg& conn,
                                                        const BilinearForm& form);

}  // namespace oscalg
