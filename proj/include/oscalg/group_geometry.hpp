#pragma once

// Floating-point coordinate layer: the simply connected group integrating an
// oscillator algebra, its left-invariant frame, the induced metric, and
// Christoffel symbols assembled from the frame plus the algebraic connection.
// Exists to cross-check the closed-form coordinate expressions; exact work
// stays in geometry.hpp.

#include "oscalg/oscillator.hpp"

#include <complex>
#include <vector>

namespace oscalg {

/// Coordinates (t, s, z_1..z_n); coordinate index order t, s, x_1, y_1, ...
/// matching the algebra basis order.
struct GroupPoint {
  double t = 0.0;
  double s = 0.0;
  std::vector<std::complex<double>> z;

  int n() const { return static_cast<int>(z.size()); }
};

std::vector<double> lambda_values(const Lambda& lambda);

/// (t,s,z)(t',s',z') = (t+t', s+s'+sum_j Im(conj(z_j) e^{i t lambda_j} z'_j)/2,
///                      z_j + e^{i t lambda_j} z'_j).
GroupPoint group_mul(const std::vector<double>& lambda, const GroupPoint& p,
                     const GroupPoint& q);

/// Point with coordinate vector mu * v, v indexed like the algebra basis.
/// Curves mu -> coordinate_ray(v, mu) have velocity v at the identity.
GroupPoint coordinate_ray(int n, const std::vector<double>& v, double mu);

/// Coordinates of a point as a flat vector (t, s, x_1, y_1, ...).
std::vector<double> coordinates(const GroupPoint& p);

/// Columns are the left-invariant frame fields at p in coordinate components;
/// column order matches the algebra basis.
std::vector<std::vector<double>> frame_at(const std::vector<double>& lambda,
                                          const GroupPoint& p);

/// Columns are the coordinate fields expressed in the frame; frame_at times
/// inverse_frame_at is the identity.
std::vector<std::vector<double>> inverse_frame_at(const std::vector<double>& lambda,
                                                  const GroupPoint& p);

/// Closed-form coordinate matrix of the metric whose frame values are the
/// standard form: h(dt,ds)=1, h(dt,dx_j)=y_j/2, h(dt,dy_j)=-x_j/2,
/// h(dx_j,dx_j)=h(dy_j,dy_j)=1/lambda_j.
std::vector<std::vector<double>> metric_at(const std::vector<double>& lambda,
                                           const GroupPoint& p);

/// Gamma[a][b] = coordinate components of nabla_{d_a} d_b at p, computed by
/// expanding the coordinate fields through the inverse frame, differentiating
/// the expansion coefficients by central differences (step), and applying the
/// algebraic connection (bracket/2 plus the c-shift on the first slot).
std::vector<std::vector<std::vector<double>>> christoffels_at(
    const std::vector<double>& lambda, double c, const GroupPoint& p, double step);

/// Closed forms the numeric ones are checked against: Gamma(d_t, d_t) = c d_s,
/// Gamma(d_t, d_{x_j}) = -(lambda_j/2)(x_j/2 d_s + d_{y_j}),
/// Gamma(d_t, d_{y_j}) = -(lambda_j/2)(y_j/2 d_s - d_{x_j}), symmetric, rest zero.
std::vector<std::vector<std::vector<double>>> christoffels_expected(
    const std::vector<double>& lambda, double c, const GroupPoint& p);

}  // namespace oscalg
