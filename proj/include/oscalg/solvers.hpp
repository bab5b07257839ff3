#pragma once

// Exact linear solvers over structure constants: invariant symmetric forms,
// derivation spaces with kernel constraints, centers and annihilators.
// These require Scalar (constant) structure constants; symbolic input is
// rejected since solving over polynomial rings is out of scope.

#include "oscalg/algebra.hpp"
#include "oscalg/linsolve.hpp"

#include <vector>

namespace oscalg {

// Packing of a symmetric dim×dim form into dim(dim+1)/2 coordinates,
// upper triangle row by row: (0,0),(0,1),...,(0,d-1),(1,1),...
int sym_coord_index(int dim, int i, int j);
std::vector<Rat> sym_coords_of_form(const BilinearForm& B);
BilinearForm form_from_sym_coords(const Basis& basis, const std::vector<Rat>& u);

// Row-major packing of a dim×dim matrix into dim² coordinates.
std::vector<Rat> matrix_coords(const MatQ& m);
MatQ matrix_from_coords(int dim, const std::vector<Rat>& u);

// All symmetric B with B([u,v],w) + B(v,[u,w]) = 0. Coordinates as above.
AffineSolutionSpace invariant_symmetric_forms(const BilinearMap& bracket);

// All J with J(xy) = (Jx)y + x(Jy) and J(v) = 0 for each constraint v.
// Coordinates are matrix_coords of J, where J(b_c) = Σ_r J[r][c] b_r.
AffineSolutionSpace derivations(const BilinearMap& product,
                                const std::vector<std::vector<Rat>>& kernel_constraints);

bool is_derivation(const BilinearMap& product, const MatQ& J);

// {x : xb = bx = 0 for all basis b}, as an RREF-canonical basis.
std::vector<std::vector<Rat>> center(const BilinearMap& product);
std::vector<std::vector<Rat>> annihilator(const BilinearMap& product);

}  // namespace oscalg
