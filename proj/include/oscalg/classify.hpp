#pragma once

// Recovers the classification of compatible commutative products on a given
// Lie bracket: set up an unknown symmetric product, impose the bracket
// compatibility identity as an exact linear system, then test the remaining
// associativity constraints on the solved space by exact substitution and
// seeded sampling. Uniqueness is checked by containment plus sampled
// exclusion, never by symbolic real-variety solving.

#include "oscalg/algebra.hpp"
#include "oscalg/linsolve.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oscalg {

// Symmetric unknown product: one fresh variable u{i}_{j}_{k} per slot with
// i ≤ j; (j,i,k) aliases (i,j,k).
class UnknownProduct {
 public:
  explicit UnknownProduct(Basis basis);

  const Basis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }
  int num_unknowns() const;
  int unknown_index(int i, int j, int k) const;
  std::string unknown_name(int i, int j, int k) const;
  Poly unknown(int i, int j, int k) const;
  const std::vector<std::string>& names() const { return names_; }

  // Product with the unknowns replaced by exact coordinates (or Polys).
  BilinearMap materialize(const std::vector<Rat>& coords) const;
  BilinearMap materialize_symbolic(const std::vector<Poly>& coords) const;

 private:
  Basis basis_;
  std::vector<std::string> names_;  // indexed by unknown_index
};

struct ConstraintSystem {
  UnknownProduct unknowns;
  MatQ linear;             // compatibility identity, one scalar row per
  std::vector<Rat> rhs;    //   (triple, component); homogeneous
  int identity_instances;  // number of basis triples instantiated
  std::vector<Poly> quadratic;  // associator components in the unknowns
};

// Linear block: every basis-triple instance of
//   [u, v∘w] = [u,v]∘w + v∘[u,w];
// quadratic block: every associator component of the unknown product.
// Throws std::invalid_argument unless the bracket is scalar and Lie.
ConstraintSystem generate_constraints(const BilinearMap& bracket);

AffineSolutionSpace solve_linear_stage(const ConstraintSystem& cs);

// Quadratic constraints restricted to the solved space: polynomials in the
// free parameters t1..tk.
std::vector<Poly> quadratic_residuals(const ConstraintSystem& cs,
                                      const AffineSolutionSpace& space);

struct ClassifyCheckpoint {
  std::string name;
  bool ok;
  bool operator==(const ClassifyCheckpoint&) const = default;
};

struct ClassifyReport {
  int linear_dim = 0;
  bool family_contained = false;
  int samples_total = 0;
  int samples_excluded = 0;
  std::vector<ClassifyCheckpoint> checkpoints;
  bool completeness_asserted = false;  // strictly increasing frequencies only
  std::uint64_t seed = 0;
  bool checkpoints_ok() const {
    for (const auto& c : checkpoints)
      if (!c.ok) return false;
    return true;
  }
};

// Full pipeline. For an algebra in the standard oscillator layout the
// one-parameter family (scalar times the central slot of the squared first
// basis vector) is tested for containment, exclusion samples are drawn off
// the family, and the n=1 proof checkpoints are evaluated on random points.
ClassifyReport classify_report(const BilinearMap& bracket, std::uint64_t seed = 42,
                               int samples = 100);

}  // namespace oscalg
