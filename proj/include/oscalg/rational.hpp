#pragma once

// Exact rational scalars. Every constant in the toolkit (lambda_j, c, gamma, a,
// mu_i, solution parameters) is a rational number, so the algebraic suites run
// with zero tolerance.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace oscalg {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument on
/// malformed input or q = 0. Result is canonical: gcd 1, denominator > 0.
Rat rat_parse(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_str(const Rat& a);

/// Checked inverse; throws std::domain_error when a = 0.
Rat rat_inv(const Rat& a);

/// Checked division; throws std::domain_error when b = 0.
Rat rat_div(const Rat& a, const Rat& b);

}  // namespace oscalg
