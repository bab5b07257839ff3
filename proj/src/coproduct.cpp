#include "oscalg/coproduct.hpp"

#include <sstream>
#include <stdexcept>

namespace oscalg {

namespace {

MatP scaled_mat(MatP m, const Poly& s) {
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) m.at(j, k) *= s;
  return m;
}

}  // namespace

Coproduct::Coproduct(Basis basis) : basis_(std::move(basis)) {
  comps_.assign(basis_.dim(), MatP(basis_.dim(), basis_.dim()));
}

const MatP& Coproduct::comp(int i) const {
  if (i < 0 || i >= basis_.dim()) throw std::out_of_range("Coproduct::comp");
  return comps_[i];
}

void Coproduct::set_comp(int i, MatP m) {
  if (i < 0 || i >= basis_.dim()) throw std::out_of_range("Coproduct::set_comp");
  if (m.rows() != basis_.dim() || m.cols() != basis_.dim())
    throw std::invalid_argument("Coproduct::set_comp: component shape");
  comps_[i] = std::move(m);
}

void Coproduct::add(int i, int j, int k, const Poly& c) {
  if (i < 0 || i >= basis_.dim()) throw std::out_of_range("Coproduct::add");
  comps_[i].at(j, k) += c;
}

bool Coproduct::is_zero() const {
  for (const auto& m : comps_)
    if (!m.is_zero()) return false;
  return true;
}

std::vector<std::tuple<int, int, int, Poly>> Coproduct::entries() const {
  std::vector<std::tuple<int, int, int, Poly>> out;
  const int d = basis_.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!comps_[i].at(j, k).is_zero()) out.emplace_back(i, j, k, comps_[i].at(j, k));
  return out;
}

Coproduct Coproduct::operator+(const Coproduct& o) const {
  if (!(basis_ == o.basis_)) throw std::invalid_argument("Coproduct::+: basis mismatch");
  Coproduct r(basis_);
  for (int i = 0; i < basis_.dim(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
  return r;
}

Coproduct Coproduct::scaled(const Rat& s) const {
  Coproduct r(basis_);
  const Poly sp{s};
  for (int i = 0; i < basis_.dim(); ++i) r.comps_[i] = scaled_mat(comps_[i], sp);
  return r;
}

MatP tensor_outer(const std::vector<Poly>& u, const std::vector<Poly>& v) {
  const int d = (int)u.size();
  if ((int)v.size() != d) throw std::invalid_argument("tensor_outer: size mismatch");
  MatP m(d, d);
  for (int j = 0; j < d; ++j) {
    if (u[j].is_zero()) continue;
    for (int k = 0; k < d; ++k)
      if (!v[k].is_zero()) m.at(j, k) = u[j] * v[k];
  }
  return m;
}

MatP tensor_wedge(const std::vector<Poly>& u, const std::vector<Poly>& v) {
  return tensor_outer(u, v) - tensor_outer(v, u);
}

MatP tensor_odot(const std::vector<Poly>& u, const std::vector<Poly>& v) {
  return tensor_outer(u, v) + tensor_outer(v, u);
}

MatP ad_on_tensor(const BilinearMap& bracket, const std::vector<Poly>& u, const MatP& r) {
  MatP A = bracket.left_mul_matrix(u);
  return A * r + r * A.transpose();
}

std::pair<Coproduct, Coproduct> twist_split(const Coproduct& d) {
  const int n = d.basis().dim();
  Coproduct skew(d.basis()), sym(d.basis());
  const Poly half{Rat(1, 2)};
  for (int i = 0; i < n; ++i) {
    const MatP& m = d.comp(i);
    MatP mt = m.transpose();
    skew.set_comp(i, scaled_mat(m - mt, half));
    sym.set_comp(i, scaled_mat(m + mt, half));
  }
  return {std::move(skew), std::move(sym)};
}

namespace {

std::vector<Poly> flatten(const MatP& m) {
  std::vector<Poly> out;
  out.reserve((size_t)m.rows() * m.cols());
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) out.push_back(m.at(j, k));
  return out;
}

std::string tensor_text(const Basis& basis, const MatP& m) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < m.rows(); ++j)
    for (int k = 0; k < m.cols(); ++k) {
      if (m.at(j, k).is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << m.at(j, k).str() << ")*" << basis.labels[j] << "⊗" << basis.labels[k];
      first = false;
    }
  return first ? "0" : os.str();
}

}  // namespace

CheckReport check_cocycle(const BilinearMap& bracket, const Coproduct& d) {
  if (!(bracket.basis() == d.basis()))
    throw std::invalid_argument("check_cocycle: basis mismatch");
  const Basis& basis = d.basis();
  const int n = basis.dim();
  CheckReport rep;
  rep.check = "cocycle";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatP r(n, n);
      for (const auto& [k, c] : bracket.pair_row(i, j)) r = r + scaled_mat(d.comp(k), c);
      r = r - ad_on_tensor(bracket, basis_vector(n, i), d.comp(j));
      r = r + ad_on_tensor(bracket, basis_vector(n, j), d.comp(i));
      if (!r.is_zero()) {
        Violation v;
        v.identity = "cocycle";
        v.at = {i, j};
        v.at_text = triple_text(basis, v.at);
        v.residual_text = tensor_text(basis, r);
        v.residual = flatten(r);
        rep.violations.push_back(std::move(v));
      }
    }
  return rep;
}

BilinearMap dual_product(const Coproduct& d) {
  Basis dual = dual_basis(d.basis());
  BilinearMap p(dual);
  for (const auto& [i, j, k, c] : d.entries()) p.add(j, k, i, c);
  return p;
}

}  // namespace oscalg
