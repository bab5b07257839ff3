#pragma once

// Single-threaded reference versions of the identity checks. These go
// through BilinearMap::apply on dense basis vectors instead of the sparse
// row walks used by the parallel kernels, so agreement between the two is a
// real cross-check and not a tautology. Reports must compare equal to the
// parallel ones, violation for violation.

#include "oscalg/checks.hpp"

namespace oscalg::serial {

CheckReport check_jacobi(const BilinearMap& bracket);
CheckReport check_assoc_comm(const BilinearMap& product);
CheckReport check_poisson(const BilinearMap& bracket, const BilinearMap& circ);
CheckReport check_symmetric_leibniz(const BilinearMap& product);
CheckReport check_form_invariance(const BilinearForm& form, const BilinearMap& p,
                                  InvarianceMode mode);

}  // namespace oscalg::serial
