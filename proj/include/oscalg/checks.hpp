#pragma once

// Identity checks over a finite basis. Bilinearity makes basis probes
// complete, so each check enumerates tuples of basis indices and records
// every nonzero residual. Kernels are parallelized over the outer index;
// per-index buffers are merged in order, so reports are deterministic.
// oscalg/serial_ref.hpp holds a single-threaded reference used in tests.

#include "oscalg/algebra.hpp"
#include "oscalg/report.hpp"

namespace oscalg {

// Residual [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] over i<j<k.
// Throws std::invalid_argument when the input is not antisymmetric.
CheckReport check_jacobi(const BilinearMap& bracket);

// Commutator residuals over i<j, associator residuals over all triples.
CheckReport check_assoc_comm(const BilinearMap& product);

// Compatibility of a bracket with a product:
//   residual = [u,v]∘w + v∘[u,w] − [u, v∘w].
// Precondition failures (bracket not antisymmetric or not Jacobi, product
// not commutative or not associative) are recorded in the report rather
// than thrown, so callers can see how a candidate pair fails.
CheckReport check_poisson(const BilinearMap& bracket, const BilinearMap& circ);

// Both multiplication-operator identities for a single product:
//   left:  u(vw) − (uv)w − v(uw)
//   right: (vw)u − (vu)w − v(wu)
CheckReport check_symmetric_leibniz(const BilinearMap& product);

enum class InvarianceMode { bracket, product };

// bracket mode: B([u,v],w) + B(v,[u,w]); product mode: B(uv,w) − B(u,vw).
CheckReport check_form_invariance(const BilinearForm& form, const BilinearMap& p,
                                  InvarianceMode mode);

}  // namespace oscalg
