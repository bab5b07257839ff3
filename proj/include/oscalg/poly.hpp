#pragma once

// Sparse multivariate polynomials over Rat in named parameters. These carry the
// symbolic constants of the toolkit: c (Poisson family), gamma (coproduct),
// a (rank-one r tensors), mu_i (derivation parameters), t_i (free solution
// parameters) and the classification unknowns.
//
// Canonical form:
//   - variables sorted by name, exponent vectors aligned to that order;
//   - terms sorted in descending graded-lexicographic order;
//   - no zero coefficients; no variable retained with zero exponent everywhere,
//     so a polynomial with empty variable support round-trips to a scalar.

#include "oscalg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace oscalg {

class Poly {
 public:
  struct Term {
    std::vector<unsigned> exps;
    Rat coeff;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;  // zero
  explicit Poly(const Rat& constant);
  explicit Poly(long constant);
  static Poly variable(const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Throws std::domain_error unless the polynomial is constant.
  Rat constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  bool operator==(const Poly&) const = default;

  /// Full evaluation; every variable must be assigned (missing -> throw).
  Rat eval(const std::map<std::string, Rat>& assignment) const;
  /// Partial substitution of variables by polynomials; unassigned vars remain.
  Poly subst(const std::map<std::string, Poly>& assignment) const;

  std::string str() const;

 private:
  static Poly make(std::vector<std::string> vars,
                   std::map<std::vector<unsigned>, Rat> acc);

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const Rat& s);
Poly operator*(const Rat& s, Poly a);

}  // namespace oscalg
