#pragma once

// Structure-constant representation of finite-dimensional (possibly
// nonassociative) algebras: bases, bilinear maps/forms, linear maps, the
// admissibility split, and exact signature computation.
//
// Basis order convention shared by every module and file format:
// (e-1, e0, e1, ê1, ..., en, ên).

#include "oscalg/linsolve.hpp"

#include <functional>
#include <tuple>

namespace oscalg {

struct Basis {
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(labels.size()); }
  int index_of(const std::string& label) const;
  bool operator==(const Basis&) const = default;
};

/// Validates: labels nonempty and distinct.
Basis make_basis(std::vector<std::string> labels);

/// Same order, labels suffixed with "*".
Basis dual_basis(const Basis& b);

/// Basis of A followed by the dual basis (for the double construction).
Basis doubled_basis(const Basis& b);

/// Bilinear product b_i . b_j = sum_k c[i][j][k] b_k with Poly coefficients,
/// stored sparsely per (i, j) pair.
class BilinearMap {
 public:
  explicit BilinearMap(Basis basis);

  const Basis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }

  void add(int i, int j, int k, const Poly& coeff);
  void set(int i, int j, int k, const Poly& coeff);
  const Poly& coeff(int i, int j, int k) const;
  /// Sparse row for the pair (i, j): nonzero (k, coeff), k ascending.
  const std::vector<std::pair<int, Poly>>& pair_row(int i, int j) const;

  /// b_i . b_j as a dense coefficient vector.
  std::vector<Poly> apply_pair(int i, int j) const;
  /// Bilinear extension to arbitrary coefficient vectors.
  std::vector<Poly> apply(const std::vector<Poly>& x, const std::vector<Poly>& y) const;

  bool is_zero() const;
  bool is_scalar() const;
  bool is_antisymmetric() const;
  bool is_commutative() const;

  BilinearMap operator+(const BilinearMap& o) const;
  BilinearMap operator-(const BilinearMap& o) const;
  BilinearMap scaled(const Rat& s) const;
  /// (x, y) -> p(y, x).
  BilinearMap swapped_args() const;
  bool operator==(const BilinearMap& o) const;

  /// Nonzero entries as (i, j, k, coeff), lexicographically sorted.
  std::vector<std::tuple<int, int, int, Poly>> entries() const;

  /// Matrix of left multiplication by the coefficient vector x (column action).
  MatP left_mul_matrix(const std::vector<Poly>& x) const;

 private:
  Basis basis_;
  std::vector<std::vector<std::pair<int, Poly>>> rows_;  // index i*dim + j
};

/// mul: bilinear evaluation through the structure constants.
std::vector<Poly> mul(const BilinearMap& p, const std::vector<Poly>& x,
                      const std::vector<Poly>& y);

struct AdmissibleSplit {
  BilinearMap bracket;  // x.y - y.x (full commutator, not halved)
  BilinearMap circ;     // (x.y + y.x)/2
};

/// Commutator/anticommutator split; x.y = bracket(x,y)/2 + circ(x,y).
AdmissibleSplit split_admissible(const BilinearMap& p);

enum class FormSymmetry { symmetric, skew, none };

/// Bilinear form with exact (Rat) entries and a declared symmetry class that
/// is validated entrywise at construction.
class BilinearForm {
 public:
  BilinearForm(Basis basis, MatQ entries, FormSymmetry symmetry);

  const Basis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }
  const MatQ& entries() const { return entries_; }
  FormSymmetry symmetry() const { return symmetry_; }

  const Rat& at(int i, int j) const { return entries_.at(i, j); }
  Poly eval(const std::vector<Poly>& x, const std::vector<Poly>& y) const;

  bool operator==(const BilinearForm&) const = default;

 private:
  Basis basis_;
  MatQ entries_;
  FormSymmetry symmetry_;
};

class LinearMap {
 public:
  LinearMap(Basis basis, MatP matrix);

  const Basis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }
  const MatP& matrix() const { return matrix_; }
  std::vector<Poly> apply(const std::vector<Poly>& x) const { return matrix_.apply(x); }

  bool operator==(const LinearMap&) const = default;

 private:
  Basis basis_;
  MatP matrix_;
};

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  bool operator==(const Inertia&) const = default;
};

/// Exact inertia by congruence diagonalization (symmetric pivoting).
/// Requires a symmetric form.
Inertia signature(const BilinearForm& form);

// Coefficient-vector helpers.
std::vector<Poly> zero_vector(int dim);
std::vector<Poly> basis_vector(int dim, int i);
std::vector<Poly> vec_add(std::vector<Poly> a, const std::vector<Poly>& b);
std::vector<Poly> vec_sub(std::vector<Poly> a, const std::vector<Poly>& b);
std::vector<Poly> vec_scale(std::vector<Poly> a, const Poly& s);
bool vec_is_zero(const std::vector<Poly>& a);
std::vector<Poly> vec_from_rat(const std::vector<Rat>& a);

/// Formats a coefficient vector against basis labels, e.g. "2*e0 - c*ê1".
std::string format_combination(const Basis& basis, const std::vector<Poly>& v);

}  // namespace oscalg
