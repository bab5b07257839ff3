#pragma once

// Check reports: deterministic lists of identity violations with exact
// residuals. A report passes when its precondition held and no violation was
// recorded; residuals are polynomials, so "pass" means identically zero.

#include "oscalg/algebra.hpp"

#include <string>
#include <vector>

namespace oscalg {

struct Violation {
  std::string identity;        // which identity failed ("jacobi", "associator", ...)
  std::vector<int> at;         // basis indices probed
  std::string at_text;         // e.g. "(e-1, e1, ê1)"
  std::vector<Poly> residual;  // layout owned by the emitting check
  std::string residual_text;

  bool operator==(const Violation&) const = default;
};

struct CheckReport {
  std::string check;
  bool precondition_ok = true;
  std::string precondition_note;
  std::vector<Violation> violations;

  bool pass() const { return precondition_ok && violations.empty(); }
  bool operator==(const CheckReport&) const = default;
};

std::string triple_text(const Basis& basis, const std::vector<int>& at);

}  // namespace oscalg
