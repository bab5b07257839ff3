#include "oscalg/checks.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg {

std::string triple_text(const Basis& basis, const std::vector<int>& at) {
  std::ostringstream os;
  os << "(";
  for (size_t p = 0; p < at.size(); ++p) {
    if (p) os << ", ";
    os << basis.labels[at[p]];
  }
  os << ")";
  return os.str();
}

namespace {

std::string residual_vec_text(const Basis& basis, const std::vector<Poly>& r) {
  return format_combination(basis, r);
}

Violation make_violation(const Basis& basis, std::string identity, std::vector<int> at,
                         std::vector<Poly> residual) {
  Violation v;
  v.identity = std::move(identity);
  v.at_text = triple_text(basis, at);
  v.at = std::move(at);
  if (residual.size() == basis.labels.size()) {
    v.residual_text = residual_vec_text(basis, residual);
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

// Runs fn(i, out_i) for each outer index and concatenates the buffers in
// index order. The merge order fixes the report layout regardless of the
// thread count.
template <class Fn>
std::vector<Violation> collect_outer(int n, Fn fn) {
  std::vector<std::vector<Violation>> per(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) fn(i, per[i]);
  std::vector<Violation> all;
  for (auto& chunk : per)
    for (auto& v : chunk) all.push_back(std::move(v));
  return all;
}

// x ∘ (row of constants) without materializing the left argument as a
// dense vector: walks the sparse rows of p directly.
std::vector<Poly> apply_left_index(const BilinearMap& p, int i, const std::vector<Poly>& y) {
  const int d = p.basis().dim();
  std::vector<Poly> out(d);
  for (int j = 0; j < d; ++j) {
    if (y[j].is_zero()) continue;
    for (const auto& [k, c] : p.pair_row(i, j)) out[k] += c * y[j];
  }
  return out;
}

std::vector<Poly> apply_right_index(const BilinearMap& p, const std::vector<Poly>& x, int j) {
  const int d = p.basis().dim();
  std::vector<Poly> out(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [k, c] : p.pair_row(i, j)) out[k] += c * x[i];
  }
  return out;
}

std::vector<Poly> row_vec(const BilinearMap& p, int i, int j) {
  std::vector<Poly> out(p.basis().dim());
  for (const auto& [k, c] : p.pair_row(i, j)) out[k] = c;
  return out;
}

}  // namespace

CheckReport check_jacobi(const BilinearMap& bracket) {
  if (!bracket.is_antisymmetric())
    throw std::invalid_argument("check_jacobi: bracket is not antisymmetric");
  const Basis& basis = bracket.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "jacobi";
  rep.violations = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        std::vector<Poly> r = apply_left_index(bracket, i, row_vec(bracket, j, k));
        std::vector<Poly> t = apply_left_index(bracket, j, row_vec(bracket, k, i));
        std::vector<Poly> u = apply_left_index(bracket, k, row_vec(bracket, i, j));
        for (int m = 0; m < d; ++m) r[m] += t[m] + u[m];
        if (!vec_is_zero(r)) out.push_back(make_violation(basis, "jacobi", {i, j, k}, std::move(r)));
      }
  });
  return rep;
}

CheckReport check_assoc_comm(const BilinearMap& product) {
  const Basis& basis = product.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "assoc_comm";
  auto comm = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = i + 1; j < d; ++j) {
      std::vector<Poly> r = row_vec(product, i, j);
      std::vector<Poly> s = row_vec(product, j, i);
      for (int m = 0; m < d; ++m) r[m] -= s[m];
      if (!vec_is_zero(r)) out.push_back(make_violation(basis, "commutator", {i, j}, std::move(r)));
    }
  });
  auto assoc = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = 0; j < d; ++j) {
      std::vector<Poly> ij = row_vec(product, i, j);
      for (int k = 0; k < d; ++k) {
        std::vector<Poly> r = apply_right_index(product, ij, k);
        std::vector<Poly> s = apply_left_index(product, i, row_vec(product, j, k));
        for (int m = 0; m < d; ++m) r[m] -= s[m];
        if (!vec_is_zero(r))
          out.push_back(make_violation(basis, "associator", {i, j, k}, std::move(r)));
      }
    }
  });
  rep.violations = std::move(comm);
  for (auto& v : assoc) rep.violations.push_back(std::move(v));
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
  bool pre = true;
  {
    bool anti = bracket.is_antisymmetric();
    bool jac = anti && check_jacobi(bracket).pass();
    bool comm = circ.is_commutative();
    bool assoc = comm && check_assoc_comm(circ).pass();
    if (!anti) note << "bracket not antisymmetric; ";
    else if (!jac) note << "bracket fails jacobi; ";
    if (!comm) note << "product not commutative; ";
    else if (!assoc) note << "product not associative; ";
    pre = anti && jac && comm && assoc;
  }
  rep.precondition_ok = pre;
  rep.precondition_note = note.str();

  rep.violations = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = 0; j < d; ++j) {
      std::vector<Poly> bij = row_vec(bracket, i, j);
      for (int k = 0; k < d; ++k) {
        std::vector<Poly> r = apply_right_index(circ, bij, k);
        std::vector<Poly> s = apply_left_index(circ, j, row_vec(bracket, i, k));
        std::vector<Poly> t = apply_left_index(bracket, i, row_vec(circ, j, k));
        for (int m = 0; m < d; ++m) r[m] += s[m] - t[m];
        if (!vec_is_zero(r))
          out.push_back(make_violation(basis, "poisson", {i, j, k}, std::move(r)));
      }
    }
  });
  return rep;
}

CheckReport check_symmetric_leibniz(const BilinearMap& product) {
  const Basis& basis = product.basis();
  const int d = basis.dim();
  CheckReport rep;
  rep.check = "symmetric_leibniz";
  auto left = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        std::vector<Poly> r = apply_left_index(product, i, row_vec(product, j, k));
        std::vector<Poly> s = apply_right_index(product, row_vec(product, i, j), k);
        std::vector<Poly> t = apply_left_index(product, j, row_vec(product, i, k));
        for (int m = 0; m < d; ++m) r[m] -= s[m] + t[m];
        if (!vec_is_zero(r))
          out.push_back(make_violation(basis, "left-leibniz", {i, j, k}, std::move(r)));
      }
  });
  auto right = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        std::vector<Poly> r = apply_right_index(product, row_vec(product, j, k), i);
        std::vector<Poly> s = apply_right_index(product, row_vec(product, j, i), k);
        std::vector<Poly> t = apply_left_index(product, j, row_vec(product, k, i));
        for (int m = 0; m < d; ++m) r[m] -= s[m] + t[m];
        if (!vec_is_zero(r))
          out.push_back(make_violation(basis, "right-leibniz", {i, j, k}, std::move(r)));
      }
  });
  rep.violations = std::move(left);
  for (auto& v : right) rep.violations.push_back(std::move(v));
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
  rep.violations = collect_outer(d, [&](int i, std::vector<Violation>& out) {
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Poly r;
        if (mode == InvarianceMode::bracket) {
          // B([u,v],w) + B(v,[u,w]) with u=b_i, v=b_j, w=b_k
          for (const auto& [m, c] : p.pair_row(i, j)) r += c * Poly(form.at(m, k));
          for (const auto& [m, c] : p.pair_row(i, k)) r += c * Poly(form.at(j, m));
        } else {
          // B(uv,w) − B(u,vw)
          for (const auto& [m, c] : p.pair_row(i, j)) r += c * Poly(form.at(m, k));
          for (const auto& [m, c] : p.pair_row(j, k)) r -= c * Poly(form.at(i, m));
        }
        if (!r.is_zero())
          out.push_back(make_violation(basis, rep.check, {i, j, k}, {std::move(r)}));
      }
  });
  return rep;
}

}  // namespace oscalg
