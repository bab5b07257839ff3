#pragma once

// Dense rectangular matrices over an exact ring (Rat or Poly).

#include "oscalg/poly.hpp"

#include <vector>

namespace oscalg {

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) {
    check(i, j);
    return d_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T& at(int i, int j) const {
    check(i, j);
    return d_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Mat transpose() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Mat operator+(const Mat& o) const {
    same_shape(o);
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = d_[k] + o.d_[k];
    return m;
  }
  Mat operator-(const Mat& o) const {
    same_shape(o);
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < d_.size(); ++k) m.d_[k] = d_[k] - o.d_[k];
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (a == T()) continue;
        for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
      }
    return m;
  }

  bool operator==(const Mat&) const = default;

  bool is_zero() const {
    for (const T& v : d_)
      if (!(v == T())) return false;
    return true;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<T> y(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index out of bounds");
  }
  void same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> d_;
};

using MatQ = Mat<Rat>;
using MatP = Mat<Poly>;

inline MatP mat_to_poly(const MatQ& m) {
  MatP p(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) p.at(i, j) = Poly(m.at(i, j));
  return p;
}

inline bool mat_is_constant(const MatP& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_constant()) return false;
  return true;
}

/// Throws std::domain_error when a symbolic entry is present.
inline MatQ mat_to_scalar(const MatP& m) {
  MatQ q(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) q.at(i, j) = m.at(i, j).constant_value();
  return q;
}

}  // namespace oscalg
