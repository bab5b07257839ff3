#include "oscalg/algebra.hpp"

#include <algorithm>
#include <set>

namespace oscalg {

int Basis::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

Basis make_basis(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("empty basis");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("duplicate basis labels");
  return Basis{std::move(labels)};
}

Basis dual_basis(const Basis& b) {
  std::vector<std::string> labels;
  labels.reserve(b.labels.size());
  for (const auto& l : b.labels) labels.push_back(l + "*");
  return Basis{std::move(labels)};
}

Basis doubled_basis(const Basis& b) {
  std::vector<std::string> labels = b.labels;
  for (const auto& l : b.labels) labels.push_back(l + "*");
  return Basis{std::move(labels)};
}

BilinearMap::BilinearMap(Basis basis)
    : basis_(std::move(basis)),
      rows_(static_cast<std::size_t>(basis_.dim()) * basis_.dim()) {}

namespace {
const Poly kZero{};
}

void BilinearMap::add(int i, int j, int k, const Poly& coeff) {
  const int d = dim();
  if (i < 0 || i >= d || j < 0 || j >= d || k < 0 || k >= d)
    throw std::out_of_range("structure constant index out of bounds");
  if (coeff.is_zero()) return;
  auto& row = rows_[static_cast<std::size_t>(i) * d + j];
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const auto& e, int kk) { return e.first < kk; });
  if (it != row.end() && it->first == k) {
    it->second += coeff;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {k, coeff});
  }
}

void BilinearMap::set(int i, int j, int k, const Poly& coeff) {
  const Poly cur = this->coeff(i, j, k);
  add(i, j, k, coeff - cur);
}

const Poly& BilinearMap::coeff(int i, int j, int k) const {
  const auto& row = pair_row(i, j);
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const auto& e, int kk) { return e.first < kk; });
  if (it != row.end() && it->first == k) return it->second;
  return kZero;
}

const std::vector<std::pair<int, Poly>>& BilinearMap::pair_row(int i, int j) const {
  const int d = dim();
  if (i < 0 || i >= d || j < 0 || j >= d)
    throw std::out_of_range("pair index out of bounds");
  return rows_[static_cast<std::size_t>(i) * d + j];
}

std::vector<Poly> BilinearMap::apply_pair(int i, int j) const {
  std::vector<Poly> v(dim());
  for (const auto& [k, c] : pair_row(i, j)) v[k] = c;
  return v;
}

std::vector<Poly> BilinearMap::apply(const std::vector<Poly>& x,
                                     const std::vector<Poly>& y) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<Poly> out(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Poly xy = x[i] * y[j];
      for (const auto& [k, c] : pair_row(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

bool BilinearMap::is_zero() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

bool BilinearMap::is_scalar() const {
  for (const auto& row : rows_)
    for (const auto& [k, c] : row)
      if (!c.is_constant()) return false;
  return true;
}

bool BilinearMap::is_antisymmetric() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!(coeff(i, j, k) + coeff(j, i, k)).is_zero()) return false;
  return true;
}

bool BilinearMap::is_commutative() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!(coeff(i, j, k) - coeff(j, i, k)).is_zero()) return false;
  return true;
}

BilinearMap BilinearMap::operator+(const BilinearMap& o) const {
  if (!(basis_ == o.basis_)) throw std::invalid_argument("basis mismatch");
  BilinearMap out = *this;
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : o.pair_row(i, j)) out.add(i, j, k, c);
  return out;
}

BilinearMap BilinearMap::operator-(const BilinearMap& o) const {
  if (!(basis_ == o.basis_)) throw std::invalid_argument("basis mismatch");
  BilinearMap out = *this;
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : o.pair_row(i, j)) out.add(i, j, k, -c);
  return out;
}

BilinearMap BilinearMap::scaled(const Rat& s) const {
  BilinearMap out(basis_);
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : pair_row(i, j)) out.add(i, j, k, c * s);
  return out;
}

BilinearMap BilinearMap::swapped_args() const {
  BilinearMap out(basis_);
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : pair_row(i, j)) out.add(j, i, k, c);
  return out;
}

bool BilinearMap::operator==(const BilinearMap& o) const {
  return basis_ == o.basis_ && rows_ == o.rows_;
}

std::vector<std::tuple<int, int, int, Poly>> BilinearMap::entries() const {
  std::vector<std::tuple<int, int, int, Poly>> out;
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : pair_row(i, j)) out.emplace_back(i, j, k, c);
  return out;
}

MatP BilinearMap::left_mul_matrix(const std::vector<Poly>& x) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("vector dimension mismatch");
  MatP m(d, d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : pair_row(i, j)) m.at(k, j) += x[i] * c;
  }
  return m;
}

std::vector<Poly> mul(const BilinearMap& p, const std::vector<Poly>& x,
                      const std::vector<Poly>& y) {
  return p.apply(x, y);
}

AdmissibleSplit split_admissible(const BilinearMap& p) {
  BilinearMap bracket = p - p.swapped_args();
  BilinearMap circ = (p + p.swapped_args()).scaled(Rat(1, 2));
  return AdmissibleSplit{std::move(bracket), std::move(circ)};
}

BilinearForm::BilinearForm(Basis basis, MatQ entries, FormSymmetry symmetry)
    : basis_(std::move(basis)), entries_(std::move(entries)), symmetry_(symmetry) {
  const int d = basis_.dim();
  if (entries_.rows() != d || entries_.cols() != d)
    throw std::invalid_argument("form shape does not match basis");
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (symmetry_ == FormSymmetry::symmetric &&
          entries_.at(i, j) != entries_.at(j, i))
        throw std::invalid_argument("declared symmetric form is not symmetric");
      if (symmetry_ == FormSymmetry::skew && entries_.at(i, j) != -entries_.at(j, i))
        throw std::invalid_argument("declared skew form is not skew");
    }
  }
}

Poly BilinearForm::eval(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("vector dimension mismatch");
  Poly out;
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (entries_.at(i, j) == 0 || y[j].is_zero()) continue;
      out += x[i] * y[j] * entries_.at(i, j);
    }
  }
  return out;
}

LinearMap::LinearMap(Basis basis, MatP matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != basis_.dim() || matrix_.cols() != basis_.dim())
    throw std::invalid_argument("linear map shape does not match basis");
}

Inertia signature(const BilinearForm& form) {
  if (form.symmetry() != FormSymmetry::symmetric)
    throw std::invalid_argument("signature requires a symmetric form");
  MatQ m = form.entries();
  const int d = m.rows();
  Inertia out;
  std::vector<bool> done(d, false);

  // Congruence diagonalization. Works over the rationals since char != 2:
  // when every remaining diagonal entry vanishes but some off-diagonal entry
  // a_pq is nonzero, the row/column update m <- (E m E^T) with x_p += x_q
  // creates a nonzero diagonal entry 2 a_pq.
  for (int step = 0; step < d; ++step) {
    int p = -1;
    for (int i = 0; i < d; ++i) {
      if (!done[i] && m.at(i, i) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      int q1 = -1, q2 = -1;
      for (int i = 0; i < d && q1 < 0; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < d; ++j) {
          if (done[j] || j == i) continue;
          if (m.at(i, j) != 0) {
            q1 = i;
            q2 = j;
            break;
          }
        }
      }
      if (q1 < 0) {
        for (int i = 0; i < d; ++i)
          if (!done[i]) ++out.zeros;
        return out;
      }
      for (int j = 0; j < d; ++j) m.at(q1, j) += m.at(q2, j);
      for (int i = 0; i < d; ++i) m.at(i, q1) += m.at(i, q2);
      p = q1;
    }

    const Rat piv = m.at(p, p);
    for (int i = 0; i < d; ++i) {
      if (done[i] || i == p || m.at(i, p) == 0) continue;
      const Rat f = rat_div(m.at(i, p), piv);
      for (int j = 0; j < d; ++j) m.at(i, j) -= f * m.at(p, j);
      for (int j = 0; j < d; ++j) m.at(j, i) -= f * m.at(j, p);
    }
    done[p] = true;
    if (piv > 0)
      ++out.positives;
    else
      ++out.negatives;
  }
  return out;
}

std::vector<Poly> zero_vector(int dim) { return std::vector<Poly>(dim); }

std::vector<Poly> basis_vector(int dim, int i) {
  std::vector<Poly> v(dim);
  v.at(i) = Poly(Rat(1));
  return v;
}

std::vector<Poly> vec_add(std::vector<Poly> a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Poly> vec_sub(std::vector<Poly> a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<Poly> vec_scale(std::vector<Poly> a, const Poly& s) {
  for (auto& x : a) x *= s;
  return a;
}

bool vec_is_zero(const std::vector<Poly>& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Poly> vec_from_rat(const std::vector<Rat>& a) {
  std::vector<Poly> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = Poly(a[i]);
  return v;
}

std::string format_combination(const Basis& basis, const std::vector<Poly>& v) {
  std::string out;
  for (int i = 0; i < basis.dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = v[i].str();
    if (c == "1") {
      out += basis.labels[i];
    } else if (c == "-1") {
      out += "-" + basis.labels[i];
    } else if (v[i].terms().size() > 1) {
      out += "(" + c + ")*" + basis.labels[i];
    } else {
      out += c + "*" + basis.labels[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace oscalg
