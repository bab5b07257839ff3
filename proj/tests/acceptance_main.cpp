// Acceptance battery. Each criterion prints exactly one PASS/FAIL line;
// the exit code is the number of failed criteria. Runtime limits are
// enforced with steady_clock so a regression in the exact kernels shows up
// here and not just as a slow CI job.

#include "oscalg/bialgebra.hpp"
#include "oscalg/checks.hpp"
#include "oscalg/classify.hpp"
#include "oscalg/geometry.hpp"
#include "oscalg/group_geometry.hpp"
#include "oscalg/json_io.hpp"
#include "oscalg/sampling.hpp"
#include "oscalg/serial_ref.hpp"
#include "oscalg/solvers.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace oscalg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = false;
  std::string note;
};

Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

Lambda random_increasing_lambda(SampleRng& rng, int n) {
  std::vector<Rat> values;
  Rat acc(0);
  for (int i = 0; i < n; ++i) {
    acc += Rat(Int(rng.next_in(1, 9)), Int(rng.next_in(1, 9)));
    values.push_back(acc);
  }
  return make_lambda(values);
}

std::vector<Rat> unit_rat(int dim, int i) {
  std::vector<Rat> v(dim, Rat(0));
  v[i] = Rat(1);
  return v;
}

BilinearForm first_label_square(const Basis& basis) {
  MatQ m(basis.dim(), basis.dim());
  m.at(0, 0) = Rat(1);
  return BilinearForm(basis, std::move(m), FormSymmetry::symmetric);
}

// ---- criterion bodies ------------------------------------------------

Outcome lie_structure() {
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      SampleRng rng(SampleRng::substream(42, 100 * n + trial));
      const Lambda lambda = random_increasing_lambda(rng, n);
      const auto t0 = Clock::now();
      const BilinearMap bracket = build_oscillator(lambda);
      if (!check_jacobi(bracket).pass()) return {false, "jacobi failed"};
      const BilinearForm k = build_k_lambda(lambda);
      if (!check_form_invariance(k, bracket, InvarianceMode::bracket).pass())
        return {false, "form invariance failed"};
      if (signature(k) != Inertia{2 * n + 1, 1, 0}) return {false, "signature off"};
      worst = std::max(worst, seconds_since(t0));
      if (worst >= 1.0) return {false, "instance exceeded 1s"};
    }
  std::ostringstream note;
  note << "40 instances, worst " << worst << "s";
  return {true, note.str()};
}

Outcome invariant_form_dimension() {
  const std::vector<std::vector<Rat>> lambdas = {
      {Rat(1)}, {Rat(1), Rat(5, 2)}, {Rat(1), Rat(5, 2), Rat(4)}};
  for (const auto& values : lambdas) {
    const Lambda lambda = make_lambda(values);
    const BilinearMap bracket = build_oscillator(lambda);
    const AffineSolutionSpace space = invariant_symmetric_forms(bracket);
    if (space.dim() != 2) return {false, "dimension != 2 at n=" + std::to_string(lambda.n())};
    const std::vector<std::vector<Rat>> expected = {
        sym_coords_of_form(build_k_lambda(lambda)),
        sym_coords_of_form(first_label_square(bracket.basis()))};
    if (!same_span(space.basis(), expected))
      return {false, "span mismatch at n=" + std::to_string(lambda.n())};
  }
  return {true, "dimension 2 with the expected span, n=1..3"};
}

Outcome derivation_spaces() {
  const std::vector<std::vector<Rat>> lambdas = {
      {Rat(1)}, {Rat(1), Rat(5, 2)}, {Rat(1), Rat(5, 2), Rat(4)}};
  for (const auto& values : lambdas) {
    const Lambda lambda = make_lambda(values);
    const int n = lambda.n();
    const BilinearMap bracket = build_oscillator(lambda);
    const int d = bracket.dim();
    const AffineSolutionSpace space =
        derivations(bracket, {unit_rat(d, idx_e0()), unit_rat(d, idx_em1())});
    if (space.dim() != n) return {false, "dimension != n at n=" + std::to_string(n)};
    for (const auto& coords : space.basis()) {
      const MatQ J = matrix_from_coords(d, coords);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const bool block = r >= 2 && c >= 2 && r / 2 == c / 2 && r != c;
          if (!block && J.at(r, c) != 0) return {false, "off-block entry in a generator"};
        }
      for (int i = 1; i <= n; ++i)
        if (J.at(idx_ec(i), idx_e(i)) != -J.at(idx_e(i), idx_ec(i)))
          return {false, "block is not skew"};
    }
  }
  return {true, "dimension n with rotation-block generators, n=1..3"};
}

Outcome deformed_product_identities() {
  const Poly c = Poly::variable("c");
  const std::vector<std::vector<Rat>> lambdas = {{Rat(1)}, {Rat(1), Rat(5, 2)}};
  for (const auto& values : lambdas) {
    const Lambda lambda = make_lambda(values);
    const BilinearMap bracket = build_oscillator(lambda);
    const BilinearMap circ = poisson_product(lambda.n(), c);
    const BilinearMap product = leibniz_product(lambda, c);
    if (!check_poisson(bracket, circ).pass()) return {false, "compatibility failed"};
    if (!check_assoc_comm(circ).pass()) return {false, "assoc/comm failed"};
    if (!check_symmetric_leibniz(product).pass()) return {false, "leibniz failed"};
    if (!check_form_invariance(build_k_lambda(lambda), product, InvarianceMode::product).pass())
      return {false, "product-mode invariance failed"};
  }
  return {true, "identities hold with symbolic coefficient, n=1,2"};
}

Outcome classification() {
  const auto check_one = [](const Lambda& lambda) -> std::string {
    const ClassifyReport rep = classify_report(build_oscillator(lambda), 42, 100);
    if (!rep.family_contained) return "family not contained";
    if (rep.samples_total != 100 || rep.samples_excluded != 100) return "sample exclusion short";
    if (!rep.checkpoints_ok()) return "checkpoint failed";
    if (!rep.completeness_asserted) return "completeness flag off";
    return "";
  };
  std::string msg = check_one(make_lambda({Rat(1)}));
  if (!msg.empty()) return {false, "n=1: " + msg};

  // Determinism: identical flags and seed give a byte-identical report.
  const nlohmann::json once =
      classify_report_json(classify_report(build_oscillator(make_lambda({Rat(1)})), 42, 100));
  const nlohmann::json twice =
      classify_report_json(classify_report(build_oscillator(make_lambda({Rat(1)})), 42, 100));
  if (dump_json(once) != dump_json(twice)) return {false, "report not deterministic"};

  const auto t0 = Clock::now();
  msg = check_one(make_lambda({Rat(1), Rat(3)}));
  const double t = seconds_since(t0);
  if (!msg.empty()) return {false, "n=2: " + msg};
  if (t >= 60.0) return {false, "n=2 exceeded 60s"};
  std::ostringstream note;
  note << "100/100 excluded at n=1,2; n=2 took " << t << "s";
  return {true, note.str()};
}

Outcome coproduct_from_r() {
  const Lambda lambda = make_lambda({Rat(1)});
  const Basis basis = oscillator_basis(1);
  const int d = 4;
  const Poly a = Poly::variable("a");
  const RTensor r(basis,
                  tensor_wedge(vec_scale(basis_vector(d, idx_e(1)), a), basis_vector(d, idx_ec(1))));
  const std::vector<Poly> mu = {Poly::variable("m")};
  std::vector<Poly> u0 = zero_vector(d);
  u0[idx_e(1)] = Poly::variable("u");
  u0[idx_ec(1)] = Poly::variable("v");

  if (!check_r_condition(lambda, r, mu).is_zero()) return {false, "r residual not zero"};

  const Coproduct delta = build_delta_lie(lambda, r, u0, mu);
  if (!check_cocycle(build_oscillator(lambda), delta).pass()) return {false, "cocycle failed"};
  const BilinearMap dual = dual_product(delta);
  if (!check_jacobi(dual).pass()) return {false, "dual jacobi failed"};
  if (!(dual == expected_dual_bracket(lambda, r, u0, mu)))
    return {false, "dual bracket differs from its closed form"};
  for (const auto& [i, j, k, coeff] : dual.entries()) {
    (void)k;
    (void)coeff;
    if (i == 0 || j == 0) return {false, "first dual label is not central"};
  }
  return {true, "residual, cocycle, dual bracket and centrality all exact in (a,u,v,m)"};
}

Outcome six_condition_instances() {
  const Lambda lambda = make_lambda({Rat(1)});
  const Basis basis = oscillator_basis(1);
  const int d = 4;
  double worst = 0.0;
  Coproduct first_delta(basis);
  for (int trial = 0; trial < 20; ++trial) {
    SampleRng rng(SampleRng::substream(42, 700 + trial));
    const Poly c(rng.rational());
    const Poly gamma(rng.nonzero_rational());
    const Poly a(rng.rational());
    std::vector<Poly> u0 = zero_vector(d);
    u0[idx_e(1)] = Poly(rng.rational());
    u0[idx_ec(1)] = Poly(rng.rational());
    const std::vector<Poly> mu = {Poly(rng.rational())};
    const RTensor r(basis, tensor_wedge(vec_scale(basis_vector(d, idx_e(1)), a),
                                        basis_vector(d, idx_ec(1))));

    const auto t0 = Clock::now();
    const Coproduct delta = build_delta_leibniz(lambda, gamma, r, u0, mu).delta;
    if (trial == 0) first_delta = delta;
    const BilinearMap product = leibniz_product(lambda, c);
    const LeibnizBialgebraReport rep = check_leibniz_bialgebra(product, delta);
    if (!rep.pass()) return {false, "a sampled instance failed a condition"};
    const BilinearMap phi = build_phi(product, delta);
    if (phi.dim() != 8) return {false, "double has the wrong dimension"};
    if (!check_symmetric_leibniz(phi).pass()) return {false, "double not symmetric leibniz"};
    if (!check_phi_pairing_invariance(phi).pass()) return {false, "pairing invariance failed"};
    worst = std::max(worst, seconds_since(t0));
    if (worst >= 5.0) return {false, "instance exceeded 5s"};
  }

  // Poisoning the central component must trip at least one condition.
  Coproduct bad = first_delta;
  bad.set_comp(0, bad.comp(0) + tensor_odot(basis_vector(d, idx_e(1)), basis_vector(d, idx_e(1))));
  const LeibnizBialgebraReport rep =
      check_leibniz_bialgebra(leibniz_product(lambda, Poly(Rat(1, 2))), bad);
  if (rep.pass()) return {false, "poisoned coproduct was not rejected"};

  std::ostringstream note;
  note << "20 instances with the 8-dim double, worst " << worst << "s; counterexample rejected";
  return {true, note.str()};
}

Outcome connection_invariants() {
  const Poly c = Poly::variable("c");
  const std::vector<std::vector<Rat>> lambdas = {{Rat(1)}, {Rat(1), Rat(5, 2)}};
  for (const auto& values : lambdas) {
    const Lambda lambda = make_lambda(values);
    const int n = lambda.n();
    const BilinearMap bracket = build_oscillator(lambda);
    const ConnectionAlg nabla0 = canonical_connection(bracket);
    const ConnectionAlg nabla = shifted_canonical_connection(bracket, poisson_product(n, c));

    if (!torsion(nabla, bracket).is_zero()) return {false, "shifted torsion nonzero"};
    const CurvatureTensor R0 = curvature(nabla0, bracket);
    const CurvatureTensor R = curvature(nabla, bracket);
    if (!(R == R0)) return {false, "curvature changed under the shift"};
    if (!is_locally_symmetric(nabla, R)) return {false, "curvature not parallel"};
    if (!same_span(holonomy_span(nabla0, R0), holonomy_span(nabla, R)))
      return {false, "holonomy spans differ"};

    const BilinearForm k = build_k_lambda(lambda);
    if (!metric_compat_residual(nabla0, k).empty())
      return {false, "canonical connection not metric"};
    const auto residual = metric_compat_residual(nabla, k);
    if (residual.size() != 1 || residual[0].x != 0 || residual[0].u != 0 || residual[0].v != 0 ||
        !(residual[0].value == Poly(Rat(-2)) * c))
      return {false, "shifted metric residual is not the single -2c entry"};
  }
  return {true, "all invariants exact in the symbolic coefficient, n=1,2"};
}

Outcome coordinate_cross_checks() {
  const Lambda lambda = make_lambda({Rat(1), Rat(5, 2)});
  const int n = lambda.n();
  const int d = 2 * n + 2;
  const std::vector<double> lam = lambda_values(lambda);
  const double c = 1.0;
  const MatQ kq = build_k_lambda(lambda).entries();

  const auto t0 = Clock::now();
  double worst_inverse = 0.0, worst_fd = 0.0, worst_metric = 0.0, worst_gamma = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    SampleRng rng(SampleRng::substream(42, 900 + trial));
    GroupPoint p;
    p.t = rng.real(-2.0, 2.0);
    p.s = rng.real(-2.0, 2.0);
    for (int j = 0; j < n; ++j) {
      const double x = rng.real(-2.0, 2.0);
      const double y = rng.real(-2.0, 2.0);
      p.z.emplace_back(x, y);
    }

    const auto f = frame_at(lam, p);
    const auto g = inverse_frame_at(lam, p);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int m = 0; m < d; ++m) s += f[i][m] * g[m][j];
        worst_inverse = std::max(worst_inverse, std::fabs(s - (i == j ? 1.0 : 0.0)));
      }

    const double h = 1e-6;
    for (int v = 0; v < d; ++v) {
      std::vector<double> unit(d, 0.0);
      unit[v] = 1.0;
      const auto fwd = coordinates(group_mul(lam, p, coordinate_ray(n, unit, h)));
      const auto bwd = coordinates(group_mul(lam, p, coordinate_ray(n, unit, -h)));
      for (int i = 0; i < d; ++i)
        worst_fd = std::max(worst_fd, std::fabs((fwd[i] - bwd[i]) / (2 * h) - f[i][v]));
    }

    const auto metric = metric_at(lam, p);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        double s = 0.0;
        for (int u = 0; u < d; ++u)
          for (int v = 0; v < d; ++v) s += g[u][a] * kq.at(u, v).convert_to<double>() * g[v][b];
        worst_metric = std::max(worst_metric, std::fabs(s - metric[a][b]));
      }

    const auto got = christoffels_at(lam, c, p, 1e-5);
    const auto want = christoffels_expected(lam, c, p);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int x = 0; x < d; ++x)
          worst_gamma = std::max(worst_gamma, std::fabs(got[a][b][x] - want[a][b][x]));
  }
  const double t = seconds_since(t0);

  if (worst_inverse > 1e-12) return {false, "frame inverse residual too large"};
  if (worst_fd > 1e-6) return {false, "finite-difference frame residual too large"};
  if (worst_metric > 1e-12) return {false, "metric pullback residual too large"};
  if (worst_gamma > 1e-6) return {false, "christoffel residual too large"};
  if (t >= 5.0) return {false, "suite exceeded 5s"};
  std::ostringstream note;
  note << "20 points; worst residuals " << worst_inverse << " / " << worst_fd << " / "
       << worst_metric << " / " << worst_gamma << " in " << t << "s";
  return {true, note.str()};
}

Outcome property_suites() {
  SampleRng rng(42);

  // Field axioms over the exact scalars.
  for (int trial = 0; trial < 50; ++trial) {
    const Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
    if ((a + b) + c != a + (b + c)) return {false, "addition not associative"};
    if (a * (b + c) != a * b + a * c) return {false, "distributivity failed"};
    if (a * b != b * a) return {false, "multiplication not commutative"};
    if (a != 0 && a * rat_inv(a) != 1) return {false, "inverse failed"};
  }

  // Rank-nullity and back-substitution on random exact matrices.
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = static_cast<int>(rng.next_in(2, 6));
    const int cols = static_cast<int>(rng.next_in(2, 6));
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(-4, 4, 1, 3);
    const auto null_space = solve_linear(m, std::vector<Rat>(rows, Rat(0)));
    if (!null_space) return {false, "homogeneous system reported inconsistent"};
    if (rank(m) + null_space->dim() != cols) return {false, "rank-nullity failed"};

    std::vector<Rat> x(cols);
    for (Rat& e : x) e = rng.rational(-4, 4, 1, 3);
    const std::vector<Rat> b = m.apply(x);
    const auto space = solve_linear(m, b);
    if (!space || !space->contains(x)) return {false, "solver lost a known solution"};
    std::vector<Rat> params(space->dim());
    for (Rat& e : params) e = rng.rational(-3, 3, 1, 2);
    if (m.apply(space->point(params)) != b) return {false, "back-substitution failed"};
  }

  // Twist split recombination on random coproducts.
  const Basis basis = oscillator_basis(1);
  for (int trial = 0; trial < 10; ++trial) {
    Coproduct dlt(basis);
    for (int e = 0; e < 6; ++e)
      dlt.add(static_cast<int>(rng.next_in(0, 3)), static_cast<int>(rng.next_in(0, 3)),
              static_cast<int>(rng.next_in(0, 3)), Poly(rng.rational()));
    const auto [skew, sym] = twist_split(dlt);
    if (!(skew + sym == dlt)) return {false, "twist split does not recombine"};
    for (int i = 0; i < 4; ++i) {
      if (!(skew.comp(i) + skew.comp(i).transpose()).is_zero())
        return {false, "skew half is not skew"};
      if (!(sym.comp(i) == sym.comp(i).transpose())) return {false, "symmetric half is not"};
    }
  }

  // Report determinism and agreement with the serial reference.
  const BilinearMap bracket = build_oscillator(make_lambda({Rat(1), Rat(3)}));
  if (!(check_jacobi(bracket) == check_jacobi(bracket))) return {false, "jacobi not stable"};
  if (!(check_jacobi(bracket) == serial::check_jacobi(bracket)))
    return {false, "parallel and serial reports differ"};
  const BilinearMap product = leibniz_product(make_lambda({Rat(1)}), Poly(Rat(2)));
  if (!(check_symmetric_leibniz(product) == serial::check_symmetric_leibniz(product)))
    return {false, "parallel and serial leibniz reports differ"};

  return {true, "field axioms, rank-nullity, back-substitution, twist split, determinism"};
}

}  // namespace

int main() {
  int failures = 0;
  const auto criterion = [&failures](int idx, const std::string& name,
                                     const std::function<Outcome()>& body) {
    const Outcome out = guarded(body);
    std::cout << "criterion " << idx << " (" << name << "): " << (out.ok ? "PASS" : "FAIL");
    if (!out.note.empty()) std::cout << " [" << out.note << "]";
    std::cout << std::endl;
    if (!out.ok) ++failures;
  };

  criterion(1, "Lie structure and invariant metric", lie_structure);
  criterion(2, "invariant symmetric forms have dimension two", invariant_form_dimension);
  criterion(3, "kernel-constrained derivations", derivation_spaces);
  criterion(4, "deformed product identities, symbolic coefficient", deformed_product_identities);
  criterion(5, "classification with sampled exclusion", classification);
  criterion(6, "coproduct from r: residual, cocycle, dual bracket", coproduct_from_r);
  criterion(7, "six-condition verdicts and the double", six_condition_instances);
  criterion(8, "connection invariants, symbolic coefficient", connection_invariants);
  criterion(9, "coordinate cross-checks", coordinate_cross_checks);
  criterion(10, "property suites", property_suites);

  if (failures == 0) std::cout << "all criteria passed" << std::endl;
  return failures;
}
