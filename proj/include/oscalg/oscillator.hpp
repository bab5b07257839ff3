#pragma once

// The oscillator family: dim 2n+2 algebras on the ordered basis
// (e-1, e0, e1, ê1, ..., en, ên), their invariant forms, the symplectic
// pairing on the span S of the e_i/ê_i, and the one-parameter Leibniz
// deformation of the bracket.

#include "oscalg/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oscalg {

// Frequencies 0 < λ₁ ≤ ... ≤ λₙ.
struct Lambda {
  std::vector<Rat> values;
  int n() const { return (int)values.size(); }
};

// Validating constructor; throws std::invalid_argument when unsorted or ≤ 0.
Lambda make_lambda(std::vector<Rat> values);

// Parses "1,3/2,4". Throws std::invalid_argument on malformed input.
Lambda lambda_parse(const std::string& text);

// (e-1, e0, e1, ê1, ..., en, ên); e_i sits at index 2i, ê_i at 2i+1.
Basis oscillator_basis(int n);
inline int idx_em1() { return 0; }
inline int idx_e0() { return 1; }
inline int idx_e(int i) { return 2 * i; }    // 1-based i
inline int idx_ec(int i) { return 2 * i + 1; }

// Bracket: [e-1,e_i] = λ_i ê_i, [e-1,ê_i] = −λ_i e_i, [e_i,ê_i] = e0.
BilinearMap build_oscillator(const Lambda& lambda);

// Symmetric invariant form: k(e-1,e0)=1, k(e_j,e_j)=k(ê_j,ê_j)=1/λ_j.
BilinearForm build_k_lambda(const Lambda& lambda);

// Skew pairing: ω(e_i,ê_j)=δ_ij, e-1 and e0 insert to zero.
BilinearForm build_omega(int n);

// J(e_i)=μ_i ê_i, J(ê_i)=−μ_i e_i, J(e-1)=J(e0)=0. μ entries may be
// symbolic, so the overload taking Poly is the general one.
LinearMap build_J_mu(int n, const std::vector<Poly>& mu);
LinearMap build_J_mu(int n, const std::vector<Rat>& mu);

// Strictly increasing and λ_k ≠ λ_i + λ_j for all i < j < k.
bool is_generic(const Lambda& lambda);

// Symmetric product with e-1 ∘ e-1 = c·e0 and nothing else.
BilinearMap poisson_product(int n, const Poly& c);

// bracket + poisson_product: the deformed product u·v = [u,v] + u∘v.
BilinearMap leibniz_product(const Lambda& lambda, const Poly& c);

}  // namespace oscalg
