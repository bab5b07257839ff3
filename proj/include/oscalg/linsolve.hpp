#pragma once

// Exact linear algebra: reduced row echelon form, nullspaces, affine solution
// spaces with named free parameters, and canonical subspace bases.

#include "oscalg/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oscalg {

struct RrefResult {
  MatQ m;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination. Pivot rule: first nonzero entry scanning
/// top-to-bottom within the leftmost unresolved column; deterministic.
RrefResult rref(MatQ a);

int rank(const MatQ& a);

/// Full solution set of A x = b: particular point plus nullspace basis, with
/// free parameters named t1..tk (one per free column, in column order).
class AffineSolutionSpace {
 public:
  /// Validates A*particular = b and A*v = 0 for every basis vector.
  AffineSolutionSpace(const MatQ& a, const std::vector<Rat>& b,
                      std::vector<Rat> particular,
                      std::vector<std::vector<Rat>> nullspace_basis);

  const std::vector<Rat>& particular() const { return particular_; }
  const std::vector<std::vector<Rat>>& basis() const { return basis_; }
  const std::vector<std::string>& param_names() const { return param_names_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const { return static_cast<int>(particular_.size()); }

  /// particular + sum params[i] * basis[i].
  std::vector<Rat> point(const std::vector<Rat>& params) const;
  /// Same with the free parameters left symbolic (t1..tk).
  std::vector<Poly> symbolic_point() const;
  /// Affine membership test.
  bool contains(const std::vector<Rat>& x) const;

 private:
  std::vector<Rat> particular_;
  std::vector<std::vector<Rat>> basis_;
  std::vector<std::string> param_names_;
};

/// Empty optional = inconsistent system.
std::optional<AffineSolutionSpace> solve_linear(const MatQ& a, const std::vector<Rat>& b);

/// RREF-canonical basis of the span of the given vectors.
std::vector<std::vector<Rat>> rref_span(const std::vector<std::vector<Rat>>& vecs);

bool in_span(const std::vector<std::vector<Rat>>& vecs, const std::vector<Rat>& v);

bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b);

}  // namespace oscalg
