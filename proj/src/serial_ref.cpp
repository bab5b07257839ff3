#include "oscalg/serial_ref.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg::serial {

namespace {

std::vector<Poly> unit(int d, int i) {
  std::vector<Poly> v(d);
  v[i] = Poly(Rat(1));
  return v;
}

Violation record(const Basis& basis, std::string identity, std::vector<int> at,
                 std::vector<Poly> residual) {
  Violation v;
  v.identity = std::move(identity);
  v.at_text = triple_text(basis, at);
  v.at = std::move(at);
  if (residual.size() == basis.labels.size()) {
    v.residual_text = format_combination(basis, residual);
  } else {
    std::ostringstream os;
    for (size_t p = 0; p < residual.size(); ++p) {
      if (p) os << ", ";
      os << residual[p].str();
    }
    v.residual_text = os.str();
  }
  v.residual = std::move(residual);
  return v;
}

}  // namespace

CheckReport check_jacobi(const BilinearMap& bracket) {
  if (!bracket.is_antisymmetric())
    throw std::invalid_argument("check_jacobi: bracket is not antisymmetric");
  const Basis& basis = bracket.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "jacobi";
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        auto bi = unit(d, i), bj = unit(d, j), bk = unit(d, k);
        auto r = bracket.apply(bi, bracket.apply(bj, bk));
        r = vec_add(r, bracket.apply(bj, bracket.apply(bk, bi)));
        r = vec_add(r, bracket.apply(bk, bracket.apply(bi, bj)));
        if (!vec_is_zero(r)) rep.violations.push_back(record(basis, "jacobi", {i, j, k}, r));
      }
  return rep;
}

CheckReport check_assoc_comm(const BilinearMap& product) {
  const Basis& basis = product.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "assoc_comm";
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto r = vec_sub(product.apply(unit(d, i), unit(d, j)), product.apply(unit(d, j), unit(d, i)));
      if (!vec_is_zero(r)) rep.violations.push_back(record(basis, "commutator", {i, j}, r));
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        auto bi = unit(d, i), bj = unit(d, j), bk = unit(d, k);
        auto r = vec_sub(product.apply(product.apply(bi, bj), bk),
                         product.apply(bi, product.apply(bj, bk)));
        if (!vec_is_zero(r)) rep.violations.push_back(record(basis, "associator", {i, j, k}, r));
      }
  return rep;
}

CheckReport check_poisson(const BilinearMap& bracket, const BilinearMap& circ) {
  if (!(bracket.basis() == circ.basis()))
    throw std::invalid_argument("check_poisson: bracket and product use different bases");
  const Basis& basis = bracket.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "poisson";

  std::ostringstream note;
  bool anti = bracket.is_antisymmetric();
  bool jac = anti && serial::check_jacobi(bracket).pass();
  bool comm = circ.is_commutative();
  bool assoc = comm && serial::check_assoc_comm(circ).pass();
  if (!anti) note << "bracket not antisymmetric; ";
  else if (!jac) note << "bracket fails jacobi; ";
  if (!comm) note << "product not commutative; ";
  else if (!assoc) note << "product not associative; ";
  rep.precondition_ok = anti && jac && comm && assoc;
  rep.precondition_note = note.str();

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        auto bi = unit(d, i), bj = unit(d, j), bk = unit(d, k);
        auto r = circ.apply(bracket.apply(bi, bj), bk);
        r = vec_add(r, circ.apply(bj, bracket.apply(bi, bk)));
        r = vec_sub(r, bracket.apply(bi, circ.apply(bj, bk)));
        if (!vec_is_zero(r)) rep.violations.push_back(record(basis, "poisson", {i, j, k}, r));
      }
  return rep;
}

CheckReport check_symmetric_leibniz(const BilinearMap& product) {
  const Basis& basis = product.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "symmetric_leibniz";
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        auto bi = unit(d, i), bj = unit(d, j), bk = unit(d, k);
        auto r = product.apply(bi, product.apply(bj, bk));
        r = vec_sub(r, product.apply(product.apply(bi, bj), bk));
        r = vec_sub(r, product.apply(bj, product.apply(bi, bk)));
        if (!vec_is_zero(r)) rep.violations.push_back(record(basis, "left-leibniz", {i, j, k}, r));
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        auto bi = unit(d, i), bj = unit(d, j), bk = unit(d, k);
        auto r = product.apply(product.apply(bj, bk), bi);
        r = vec_sub(r, product.apply(product.apply(bj, bi), bk));
        r = vec_sub(r, product.apply(bj, product.apply(bk, bi)));
        if (!vec_is_zero(r)) rep.violations.push_back(record(basis, "right-leibniz", {i, j, k}, r));
      }
  return rep;
}

CheckReport check_form_invariance(const BilinearForm& form, const BilinearMap& p,
                                  InvarianceMode mode) {
  if (!(form.basis() == p.basis()))
    throw std::invalid_argument("check_form_invariance: form and map use different bases");
  const Basis& basis = p.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = mode == InvarianceMode::bracket ? "form_invariance_bracket" : "form_invariance_product";
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        auto bi = unit(d, i), bj = unit(d, j), bk = unit(d, k);
        Poly r;
        if (mode == InvarianceMode::bracket) {
          r = form.eval(p.apply(bi, bj), bk) + form.eval(bj, p.apply(bi, bk));
        } else {
          r = form.eval(p.apply(bi, bj), bk) - form.eval(bi, p.apply(bj, bk));
        }
        if (!r.is_zero())
          rep.violations.push_back(record(basis, rep.check, {i, j, k}, {std::move(r)}));
      }
  return rep;
}

}  // namespace oscalg::serial
