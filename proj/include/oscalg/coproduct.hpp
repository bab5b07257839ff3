#pragma once

// Coproducts Δ: g → g⊗g stored per basis vector as a dim×dim component
// matrix, Δ(b_i) = Σ_{j,k} comp(i)[j][k] · b_j⊗b_k, plus the twist split
// into skew/symmetric halves, the induced dual product, and the adjoint
// 2-cocycle check.

#include "oscalg/algebra.hpp"
#include "oscalg/report.hpp"

#include <tuple>
#include <utility>
#include <vector>

namespace oscalg {

class Coproduct {
 public:
  explicit Coproduct(Basis basis);

  const Basis& basis() const { return basis_; }
  const MatP& comp(int i) const;
  void set_comp(int i, MatP m);
  void add(int i, int j, int k, const Poly& c);
  const Poly& coeff(int i, int j, int k) const { return comp(i).at(j, k); }

  bool is_zero() const;
  std::vector<std::tuple<int, int, int, Poly>> entries() const;  // nonzero (i,j,k,c)

  Coproduct operator+(const Coproduct& o) const;
  Coproduct scaled(const Rat& s) const;
  bool operator==(const Coproduct&) const = default;

 private:
  Basis basis_;
  std::vector<MatP> comps_;
};

// u⊗v, u∧v = u⊗v − v⊗u, u⊙v = u⊗v + v⊗u as component matrices.
MatP tensor_outer(const std::vector<Poly>& u, const std::vector<Poly>& v);
MatP tensor_wedge(const std::vector<Poly>& u, const std::vector<Poly>& v);
MatP tensor_odot(const std::vector<Poly>& u, const std::vector<Poly>& v);

// (ad_u⊗I + I⊗ad_u)(r) for r ∈ g⊗g given as a component matrix.
MatP ad_on_tensor(const BilinearMap& bracket, const std::vector<Poly>& u, const MatP& r);

// (Δ_L, Δ_a) with Δ_L(x) = ½(Δ − τΔ)(x) skew and Δ_a symmetric; they sum
// back to Δ exactly.
std::pair<Coproduct, Coproduct> twist_split(const Coproduct& d);

// Residual Δ([b_i,b_j]) − ad_{b_i}Δ(b_j) + ad_{b_j}Δ(b_i) over pairs i<j.
// A violation's residual holds the flattened component matrix (row-major).
CheckReport check_cocycle(const BilinearMap& bracket, const Coproduct& d);

// Product on the dual basis: (α∘β)(x) = (α⊗β)(Δ(x)), so
// b_p* ∘ b_q* = Σ_i coeff(i,p,q) · b_i*.
BilinearMap dual_product(const Coproduct& d);

}  // namespace oscalg
