#include "oscalg/group_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace oscalg {

namespace {

void check_point(const std::vector<double>& lambda, const GroupPoint& p) {
  if (p.n() != static_cast<int>(lambda.size()))
    throw std::invalid_argument("point mode count does not match lambda");
  if (!std::isfinite(p.t) || !std::isfinite(p.s))
    throw std::invalid_argument("nonfinite coordinate");
  for (const auto& zj : p.z)
    if (!std::isfinite(zj.real()) || !std::isfinite(zj.imag()))
      throw std::invalid_argument("nonfinite coordinate");
}

using Grid = std::vector<std::vector<double>>;

Grid zeros(int r, int c) { return Grid(r, std::vector<double>(c, 0.0)); }

}  // namespace

std::vector<double> lambda_values(const Lambda& lambda) {
  std::vector<double> out;
  out.reserve(lambda.values.size());
  for (const Rat& v : lambda.values) out.push_back(v.convert_to<double>());
  return out;
}

GroupPoint group_mul(const std::vector<double>& lambda, const GroupPoint& p,
                     const GroupPoint& q) {
  check_point(lambda, p);
  check_point(lambda, q);
  GroupPoint r;
  r.t = p.t + q.t;
  r.s = p.s + q.s;
  r.z.resize(p.z.size());
  for (std::size_t j = 0; j < p.z.size(); ++j) {
    const std::complex<double> rot =
        std::polar(1.0, p.t * lambda[j]) * q.z[j];
    r.s += 0.5 * std::imag(std::conj(p.z[j]) * rot);
    r.z[j] = p.z[j] + rot;
  }
  return r;
}

GroupPoint coordinate_ray(int n, const std::vector<double>& v, double mu) {
  if (static_cast<int>(v.size()) != 2 * n + 2)
    throw std::invalid_argument("coordinate vector length mismatch");
  GroupPoint p;
  p.t = mu * v[0];
  p.s = mu * v[1];
  p.z.resize(n);
  for (int j = 1; j <= n; ++j)
    p.z[j - 1] = std::complex<double>(mu * v[2 * j], mu * v[2 * j + 1]);
  return p;
}

std::vector<double> coordinates(const GroupPoint& p) {
  std::vector<double> out(2 * p.n() + 2);
  out[0] = p.t;
  out[1] = p.s;
  for (int j = 1; j <= p.n(); ++j) {
    out[2 * j] = p.z[j - 1].real();
    out[2 * j + 1] = p.z[j - 1].imag();
  }
  return out;
}

std::vector<std::vector<double>> frame_at(const std::vector<double>& lambda,
                                          const GroupPoint& p) {
  check_point(lambda, p);
  const int n = p.n();
  const int d = 2 * n + 2;
  Grid f = zeros(d, d);
  f[0][0] = 1.0;  // first frame field is d_t
  f[1][1] = 1.0;  // central one is d_s
  for (int j = 1; j <= n; ++j) {
    const double co = std::cos(p.t * lambda[j - 1]);
    const double si = std::sin(p.t * lambda[j - 1]);
    const double x = p.z[j - 1].real();
    const double y = p.z[j - 1].imag();
    f[1][2 * j] = 0.5 * (x * si - y * co);
    f[2 * j][2 * j] = co;
    f[2 * j + 1][2 * j] = si;
    f[1][2 * j + 1] = 0.5 * (x * co + y * si);
    f[2 * j][2 * j + 1] = -si;
    f[2 * j + 1][2 * j + 1] = co;
  }
  return f;
}

std::vector<std::vector<double>> inverse_frame_at(const std::vector<double>& lambda,
                                                  const GroupPoint& p) {
  check_point(lambda, p);
  const int n = p.n();
  const int d = 2 * n + 2;
  Grid g = zeros(d, d);
  g[0][0] = 1.0;
  g[1][1] = 1.0;
  for (int j = 1; j <= n; ++j) {
    const double co = std::cos(p.t * lambda[j - 1]);
    const double si = std::sin(p.t * lambda[j - 1]);
    const double x = p.z[j - 1].real();
    const double y = p.z[j - 1].imag();
    g[1][2 * j] = 0.5 * y;
    g[2 * j][2 * j] = co;
    g[2 * j + 1][2 * j] = -si;
    g[1][2 * j + 1] = -0.5 * x;
    g[2 * j][2 * j + 1] = si;
    g[2 * j + 1][2 * j + 1] = co;
  }
  return g;
}

std::vector<std::vector<double>> metric_at(const std::vector<double>& lambda,
                                           const GroupPoint& p) {
  check_point(lambda, p);
  const int n = p.n();
  const int d = 2 * n + 2;
  Grid h = zeros(d, d);
  h[0][1] = h[1][0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    const double x = p.z[j - 1].real();
    const double y = p.z[j - 1].imag();
    h[0][2 * j] = h[2 * j][0] = 0.5 * y;
    h[0][2 * j + 1] = h[2 * j + 1][0] = -0.5 * x;
    h[2 * j][2 * j] = 1.0 / lambda[j - 1];
    h[2 * j + 1][2 * j + 1] = 1.0 / lambda[j - 1];
  }
  return h;
}

std::vector<std::vector<std::vector<double>>> christoffels_at(
    const std::vector<double>& lambda, double c, const GroupPoint& p, double step) {
  check_point(lambda, p);
  if (!(step > 0)) throw std::invalid_argument("step must be positive");
  const int n = p.n();
  const int d = 2 * n + 2;

  // Double image of the algebraic connection: bracket/2 plus the c-shift.
  std::vector<Grid> conn(d, zeros(d, d));  // conn[u][v] = components of nabla_{b_u} b_v
  conn[0][0][1] = c;
  for (int j = 1; j <= n; ++j) {
    conn[0][2 * j][2 * j + 1] = 0.5 * lambda[j - 1];
    conn[2 * j][0][2 * j + 1] = -0.5 * lambda[j - 1];
    conn[0][2 * j + 1][2 * j] = -0.5 * lambda[j - 1];
    conn[2 * j + 1][0][2 * j] = 0.5 * lambda[j - 1];
    conn[2 * j][2 * j + 1][1] = 0.5;
    conn[2 * j + 1][2 * j][1] = -0.5;
  }

  const Grid f = frame_at(lambda, p);
  const Grid g = inverse_frame_at(lambda, p);

  // Central-difference derivative of the inverse-frame coefficients along each
  // coordinate direction.
  std::vector<Grid> dg(d);
  const std::vector<double> base = coordinates(p);
  for (int a = 0; a < d; ++a) {
    std::vector<double> fwd = base, bwd = base;
    fwd[a] += step;
    bwd[a] -= step;
    const Grid gf = inverse_frame_at(lambda, coordinate_ray(n, fwd, 1.0));
    const Grid gb = inverse_frame_at(lambda, coordinate_ray(n, bwd, 1.0));
    dg[a] = zeros(d, d);
    for (int u = 0; u < d; ++u)
      for (int b = 0; b < d; ++b) dg[a][u][b] = (gf[u][b] - gb[u][b]) / (2.0 * step);
  }

  std::vector<std::vector<std::vector<double>>> gamma(
      d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::vector<double> alg(d, 0.0);  // frame components of nabla_{d_a} d_b
      for (int v = 0; v < d; ++v) {
        alg[v] += dg[a][v][b];
        for (int u = 0; u < d; ++u) {
          const double cuv = g[u][a] * g[v][b];
          if (cuv == 0.0) continue;
          for (int k = 0; k < d; ++k) alg[k] += cuv * conn[u][v][k];
        }
      }
      for (int coord = 0; coord < d; ++coord) {
        double acc = 0.0;
        for (int v = 0; v < d; ++v) acc += f[coord][v] * alg[v];
        gamma[a][b][coord] = acc;
      }
    }
  return gamma;
}

std::vector<std::vector<std::vector<double>>> christoffels_expected(
    const std::vector<double>& lambda, double c, const GroupPoint& p) {
  check_point(lambda, p);
  const int n = p.n();
  const int d = 2 * n + 2;
  std::vector<std::vector<std::vector<double>>> gamma(
      d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)));
  gamma[0][0][1] = c;
  for (int j = 1; j <= n; ++j) {
    const double x = p.z[j - 1].real();
    const double y = p.z[j - 1].imag();
    const double half = 0.5 * lambda[j - 1];
    gamma[0][2 * j][1] = -half * 0.5 * x;
    gamma[0][2 * j][2 * j + 1] = -half;
    gamma[0][2 * j + 1][1] = -half * 0.5 * y;
    gamma[0][2 * j + 1][2 * j] = half;
    gamma[2 * j][0] = gamma[0][2 * j];
    gamma[2 * j + 1][0] = gamma[0][2 * j + 1];
  }
  return gamma;
}

}  // namespace oscalg
