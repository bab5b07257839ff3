#include "oscalg/linsolve.hpp"

#include <algorithm>

namespace oscalg {

RrefResult rref(MatQ a) {
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    }
    const Rat inv = rat_inv(a.at(r, c));
    for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Rat f = a.at(i, c);
      for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

int rank(const MatQ& a) { return rref(a).rank(); }

namespace {

std::vector<Rat> apply_to(const MatQ& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.rows(), Rat(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && x[j] != 0) y[i] += a.at(i, j) * x[j];
  return y;
}

}  // namespace

AffineSolutionSpace::AffineSolutionSpace(const MatQ& a, const std::vector<Rat>& b,
                                         std::vector<Rat> particular,
                                         std::vector<std::vector<Rat>> nullspace_basis)
    : particular_(std::move(particular)), basis_(std::move(nullspace_basis)) {
  if (static_cast<int>(particular_.size()) != a.cols())
    throw std::invalid_argument("particular solution has wrong dimension");
  if (apply_to(a, particular_) != b)
    throw std::invalid_argument("particular solution does not solve the system");
  std::vector<Rat> zero(a.rows(), Rat(0));
  for (const auto& v : basis_) {
    if (static_cast<int>(v.size()) != a.cols() || apply_to(a, v) != zero)
      throw std::invalid_argument("nullspace basis vector fails A v = 0");
  }
  MatQ span(static_cast<int>(basis_.size()), a.cols());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (int j = 0; j < a.cols(); ++j) span.at(static_cast<int>(i), j) = basis_[i][j];
  if (rank(span) != static_cast<int>(basis_.size()))
    throw std::invalid_argument("nullspace basis not linearly independent");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    param_names_.push_back("t" + std::to_string(i + 1));
}

std::vector<Rat> AffineSolutionSpace::point(const std::vector<Rat>& params) const {
  if (params.size() != basis_.size())
    throw std::invalid_argument("parameter count mismatch");
  std::vector<Rat> x = particular_;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += params[i] * basis_[i][j];
  return x;
}

std::vector<Poly> AffineSolutionSpace::symbolic_point() const {
  std::vector<Poly> x(particular_.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = Poly(particular_[j]);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Poly t = Poly::variable(param_names_[i]);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += t * Poly(basis_[i][j]);
  }
  return x;
}

bool AffineSolutionSpace::contains(const std::vector<Rat>& x) const {
  if (x.size() != particular_.size()) return false;
  std::vector<Rat> diff(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) diff[j] = x[j] - particular_[j];
  return in_span(basis_, diff);
}

std::optional<AffineSolutionSpace> solve_linear(const MatQ& a, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("rhs length does not match row count");
  const int cols = a.cols();
  MatQ aug(a.rows(), cols + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  // A pivot in the augmented column marks an inconsistent system.
  for (int c : r.pivot_cols)
    if (c == cols) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;

  std::vector<Rat> particular(cols, Rat(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    particular[r.pivot_cols[i]] = r.m.at(static_cast<int>(i), cols);

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.m.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return AffineSolutionSpace(a, b, std::move(particular), std::move(basis));
}

std::vector<std::vector<Rat>> rref_span(const std::vector<std::vector<Rat>>& vecs) {
  if (vecs.empty()) return {};
  const int cols = static_cast<int>(vecs[0].size());
  MatQ m(static_cast<int>(vecs.size()), cols);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (static_cast<int>(vecs[i].size()) != cols)
      throw std::invalid_argument("ragged span input");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = vecs[i][j];
  }
  RrefResult r = rref(std::move(m));
  std::vector<std::vector<Rat>> out;
  for (int i = 0; i < r.rank(); ++i) {
    std::vector<Rat> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = r.m.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<std::vector<Rat>>& vecs, const std::vector<Rat>& v) {
  bool v_zero = true;
  for (const Rat& x : v)
    if (x != 0) v_zero = false;
  if (v_zero) return true;
  if (vecs.empty()) return false;
  std::vector<std::vector<Rat>> aug = vecs;
  aug.push_back(v);
  return rref_span(vecs).size() == rref_span(aug).size();
}

bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b) {
  return rref_span(a) == rref_span(b);
}

}  // namespace oscalg
