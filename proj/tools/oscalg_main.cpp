// Command-line front end. Subcommands: build, check, solve, classify,
// geometry verify. Everything prints deterministic JSON (alphabetical keys)
// or fixed-format PASS/FAIL lines.
//
// Exit codes: 0 every requested check passed, 1 a check failed,
// 2 bad usage, malformed input, or a domain error from the library.

#include "oscalg/bialgebra.hpp"
#include "oscalg/checks.hpp"
#include "oscalg/classify.hpp"
#include "oscalg/geometry.hpp"
#include "oscalg/group_geometry.hpp"
#include "oscalg/json_io.hpp"
#include "oscalg/sampling.hpp"
#include "oscalg/solvers.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace oscalg;

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

// "^e1" is the ASCII spelling of "ê1".
std::string canonical_label(const std::string& raw) {
  if (!raw.empty() && raw[0] == '^') {
    if (raw.size() < 2 || raw[1] != 'e')
      throw std::invalid_argument("bad basis label '" + raw + "'");
    return "ê" + raw.substr(2);
  }
  return raw;
}

int resolve_label(const Basis& basis, const std::string& raw) {
  const int idx = basis.index_of(canonical_label(raw));
  if (idx < 0) throw std::invalid_argument("unknown basis label '" + raw + "'");
  return idx;
}

// A coefficient token is a rational or a symbol name.
Poly parse_coeff(const std::string& tok) {
  try {
    return Poly(rat_parse(tok));
  } catch (const std::invalid_argument&) {
  }
  if (tok.empty() || !(std::isalpha(static_cast<unsigned char>(tok[0])) || tok[0] == '_'))
    throw std::invalid_argument("bad coefficient '" + tok + "'");
  for (char ch : tok)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      throw std::invalid_argument("bad coefficient '" + tok + "'");
  return Poly::variable(tok);
}

std::vector<Poly> parse_coeff_list(const std::string& text) {
  std::vector<Poly> out;
  for (const std::string& tok : split_on(text, ',')) out.push_back(parse_coeff(tok));
  return out;
}

// Splits "e1^ê2" on '^' while keeping "^e" alias prefixes attached:
// "e1^^e2" -> {"e1", "^e2"}.
std::vector<std::string> split_wedge_factors(const std::string& term) {
  const std::vector<std::string> raw = split_on(term, '^');
  std::vector<std::string> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].empty()) {
      if (i + 1 >= raw.size() || raw[i + 1].empty())
        throw std::invalid_argument("bad wedge term '" + term + "'");
      out.push_back("^" + raw[i + 1]);
      ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

// "a:e1^ê1,1/2:e2^ê2"; a bare "e1^ê1" has coefficient 1.
RTensor parse_rtensor(const Basis& basis, const std::string& spec) {
  const int d = basis.dim();
  MatP m(d, d);
  for (const std::string& term : split_on(spec, ',')) {
    std::string coeff_tok = "1", wedge = term;
    const auto colon = term.find(':');
    if (colon != std::string::npos) {
      coeff_tok = term.substr(0, colon);
      wedge = term.substr(colon + 1);
    }
    const std::vector<std::string> factors = split_wedge_factors(wedge);
    if (factors.size() != 2)
      throw std::invalid_argument("wedge term '" + term + "' needs exactly two factors");
    const Poly coeff = parse_coeff(coeff_tok);
    const int j = resolve_label(basis, factors[0]);
    const int k = resolve_label(basis, factors[1]);
    m = m + tensor_wedge(vec_scale(basis_vector(d, j), coeff), basis_vector(d, k));
  }
  return RTensor(basis, m);
}

// "e1" or "3/2:e1,-1:ê1".
std::vector<Poly> parse_vector_spec(const Basis& basis, const std::string& spec) {
  std::vector<Poly> v = zero_vector(basis.dim());
  if (spec.empty()) return v;
  for (const std::string& term : split_on(spec, ',')) {
    std::string coeff_tok = "1", label = term;
    const auto colon = term.find(':');
    if (colon != std::string::npos) {
      coeff_tok = term.substr(0, colon);
      label = term.substr(colon + 1);
    }
    v[resolve_label(basis, label)] += parse_coeff(coeff_tok);
  }
  return v;
}

std::vector<Poly> parse_mu(const std::string& text, int n) {
  if (text.empty()) return zero_vector(n);
  std::vector<Poly> mu = parse_coeff_list(text);
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("--mu needs exactly " + std::to_string(n) + " entries");
  return mu;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << dump_json(j);
  else
    write_json_file(out_path, j);
}

void warn_if_not_generic(const Lambda& lambda) {
  if (!is_generic(lambda))
    std::cerr << "warning: frequency list is not generic (needs strictly increasing "
                 "values with no sum coincidence among them)\n";
}

nlohmann::json mat_json(const MatQ& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

struct Opts {
  std::string lambda_text;
  std::string c_text = "1";
  std::string gamma_text = "0";
  std::string r_spec;
  std::string u0_spec;
  std::string mu_text;
  std::string kernel_text = "e0,e-1";
  std::string in_path;
  std::string out_path;
  std::uint64_t seed = 42;
  int samples = 100;
  double fd_step = 1e-5;
  double tol = 1e-6;
};

int cmd_build_oscillator(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  warn_if_not_generic(lambda);
  emit(product_json(build_oscillator(lambda), "bracket"), o.out_path);
  return 0;
}

int cmd_build_product(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  warn_if_not_generic(lambda);
  emit(product_json(leibniz_product(lambda, parse_coeff(o.c_text)), "product"), o.out_path);
  return 0;
}

int cmd_build_form(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  emit(form_json(build_k_lambda(lambda)), o.out_path);
  return 0;
}

int cmd_build_coproduct(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  const Basis basis = oscillator_basis(lambda.n());
  const RTensor r = parse_rtensor(basis, o.r_spec);
  const LeibnizDelta ld =
      build_delta_leibniz(lambda, parse_coeff(o.gamma_text), r,
                          parse_vector_spec(basis, o.u0_spec), parse_mu(o.mu_text, lambda.n()));
  if (!ld.r_condition_ok)
    std::cerr << "warning: r fails the compatibility residual; emitting the coproduct anyway\n";
  emit(coproduct_json(ld.delta), o.out_path);
  return 0;
}

BilinearMap product_from_file(const std::string& path) {
  return product_from_json(read_json_file(path));
}

void need_one_of_lambda_in(const Opts& o, const std::string& cmd) {
  if (o.lambda_text.empty() == o.in_path.empty())
    throw std::invalid_argument(cmd + " needs exactly one of --lambda and --in");
}

int cmd_check_jacobi(const Opts& o) {
  need_one_of_lambda_in(o, "check jacobi");
  const BilinearMap bracket = o.in_path.empty() ? build_oscillator(lambda_parse(o.lambda_text))
                                                : product_from_file(o.in_path);
  const CheckReport rep = check_jacobi(bracket);
  emit(report_json(rep), o.out_path);
  return rep.pass() ? 0 : 1;
}

// Three input shapes:
//   --lambda            bracket from the frequencies, circ from --c
//   --lambda --in FILE  bracket from the frequencies, circ from the file
//   --in FILE           single product from the file, split into the pair
int cmd_check_poisson(const Opts& o) {
  CheckReport rep;
  if (!o.lambda_text.empty()) {
    const Lambda lambda = lambda_parse(o.lambda_text);
    const BilinearMap bracket = build_oscillator(lambda);
    if (o.in_path.empty()) {
      rep = check_poisson(bracket, poisson_product(lambda.n(), parse_coeff(o.c_text)));
    } else {
      const BilinearMap circ = product_from_file(o.in_path);
      if (circ.dim() != bracket.dim())
        throw std::invalid_argument("product file dimension does not match the frequency list");
      rep = check_poisson(bracket, circ);
    }
  } else if (!o.in_path.empty()) {
    const AdmissibleSplit split = split_admissible(product_from_file(o.in_path));
    rep = check_poisson(split.bracket.scaled(Rat(1, 2)), split.circ);
  } else {
    throw std::invalid_argument("check poisson needs --lambda and/or --in");
  }
  emit(report_json(rep), o.out_path);
  return rep.pass() ? 0 : 1;
}

int cmd_check_leibniz(const Opts& o) {
  need_one_of_lambda_in(o, "check leibniz");
  const BilinearMap product =
      o.in_path.empty() ? leibniz_product(lambda_parse(o.lambda_text), parse_coeff(o.c_text))
                        : product_from_file(o.in_path);
  const CheckReport rep = check_symmetric_leibniz(product);
  emit(report_json(rep), o.out_path);
  return rep.pass() ? 0 : 1;
}

int cmd_check_bialgebra(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  const Basis basis = oscillator_basis(lambda.n());
  const RTensor r = parse_rtensor(basis, o.r_spec);
  const LeibnizDelta ld =
      build_delta_leibniz(lambda, parse_coeff(o.gamma_text), r,
                          parse_vector_spec(basis, o.u0_spec), parse_mu(o.mu_text, lambda.n()));
  if (!ld.r_condition_ok)
    std::cerr << "warning: r fails the compatibility residual\n";
  const BilinearMap product = leibniz_product(lambda, parse_coeff(o.c_text));
  const LeibnizBialgebraReport rep = check_leibniz_bialgebra(product, ld.delta);
  for (int k = 0; k < 6; ++k)
    std::cout << "condition " << k + 1 << ": " << (rep.condition_ok[k] ? "PASS" : "FAIL")
              << "\n";
  if (!o.out_path.empty()) write_json_file(o.out_path, bialgebra_report_json(rep));
  return rep.pass() ? 0 : 1;
}

int cmd_check_r_condition(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  const Basis basis = oscillator_basis(lambda.n());
  const RTensor r = parse_rtensor(basis, o.r_spec);
  const RTensor residual = check_r_condition(lambda, r, parse_mu(o.mu_text, lambda.n()));
  const bool ok = residual.is_zero();
  emit(nlohmann::json{{"schema_version", kSchemaVersion},
                      {"check", "r-condition"},
                      {"pass", ok},
                      {"residual", rtensor_json(residual)}},
       o.out_path);
  return ok ? 0 : 1;
}

int cmd_solve_invariant_forms(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  const BilinearMap bracket = build_oscillator(lambda);
  const AffineSolutionSpace space = invariant_symmetric_forms(bracket);
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& v : space.basis())
    forms.push_back(form_json(form_from_sym_coords(bracket.basis(), v)));
  emit(nlohmann::json{{"schema_version", kSchemaVersion},
                      {"solve", "invariant-forms"},
                      {"dim", space.dim()},
                      {"basis", forms}},
       o.out_path);
  return 0;
}

int cmd_solve_derivations(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  const BilinearMap bracket = build_oscillator(lambda);
  const int d = bracket.dim();
  std::vector<std::vector<Rat>> constraints;
  if (!o.kernel_text.empty()) {
    for (const std::string& label : split_on(o.kernel_text, ',')) {
      std::vector<Rat> v(d, Rat(0));
      v[resolve_label(bracket.basis(), label)] = Rat(1);
      constraints.push_back(std::move(v));
    }
  }
  const AffineSolutionSpace space = derivations(bracket, constraints);
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& v : space.basis()) mats.push_back(mat_json(matrix_from_coords(d, v)));
  emit(nlohmann::json{{"schema_version", kSchemaVersion},
                      {"solve", "derivations"},
                      {"dim", space.dim()},
                      {"basis", mats}},
       o.out_path);
  return 0;
}

int cmd_classify(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  warn_if_not_generic(lambda);
  const ClassifyReport rep = classify_report(build_oscillator(lambda), o.seed, o.samples);
  const nlohmann::json j = classify_report_json(rep);
  emit(j, o.out_path);
  return j.at("pass").get<bool>() ? 0 : 1;
}

int cmd_geometry_verify(const Opts& o) {
  const Lambda lambda = lambda_parse(o.lambda_text);
  const Rat c = rat_parse(o.c_text);
  const int n = lambda.n();
  const BilinearMap bracket = build_oscillator(lambda);
  const ConnectionAlg nabla0 = canonical_connection(bracket);
  const ConnectionAlg nabla = shifted_canonical_connection(bracket, poisson_product(n, Poly(c)));

  bool all_ok = true;
  const auto line = [&all_ok](const std::string& name, bool ok, const std::string& extra = "") {
    std::cout << name << ": " << (ok ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << " (" << extra << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  };

  line("torsion-canonical", torsion(nabla0, bracket).is_zero());
  line("torsion-shifted", torsion(nabla, bracket).is_zero());

  const CurvatureTensor R0 = curvature(nabla0, bracket);
  const CurvatureTensor R = curvature(nabla, bracket);
  line("curvature-deformation-invariant", R == R0);
  line("locally-symmetric-canonical", is_locally_symmetric(nabla0, R0));
  line("locally-symmetric-shifted", is_locally_symmetric(nabla, R));

  const auto h0 = holonomy_span(nabla0, R0);
  const auto h = holonomy_span(nabla, R);
  line("holonomy-span-match", same_span(h0, h), "dim " + std::to_string(h.size()));

  const BilinearForm k = build_k_lambda(lambda);
  line("metric-residual-canonical-zero", metric_compat_residual(nabla0, k).empty());
  const auto residual = metric_compat_residual(nabla, k);
  if (c == 0) {
    line("metric-residual-shifted", residual.empty(), "zero shift");
  } else {
    const bool ok = residual.size() == 1 && residual[0].x == 0 && residual[0].u == 0 &&
                    residual[0].v == 0 && residual[0].value == Poly(Rat(-2) * c);
    line("metric-residual-shifted", ok, "value " + rat_str(Rat(-2) * c) + " at (e-1; e-1, e-1)");
  }

  // Coordinate layer: 20 seeded points per numeric comparison.
  const double cd = c.convert_to<double>();
  const std::vector<double> lam = lambda_values(lambda);
  const int d = 2 * n + 2;
  SampleRng rng(o.seed);
  const auto random_point = [&rng, n]() {
    GroupPoint p;
    p.t = rng.real(-2.0, 2.0);
    p.s = rng.real(-2.0, 2.0);
    for (int j = 0; j < n; ++j) {
      const double x = rng.real(-2.0, 2.0);
      const double y = rng.real(-2.0, 2.0);
      p.z.emplace_back(x, y);
    }
    return p;
  };

  MatQ kq = k.entries();
  double worst_inverse = 0.0, worst_fd = 0.0, worst_metric = 0.0, worst_gamma = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const GroupPoint p = random_point();
    const auto f = frame_at(lam, p);
    const auto g = inverse_frame_at(lam, p);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int m = 0; m < d; ++m) s += f[i][m] * g[m][j];
        worst_inverse = std::max(worst_inverse, std::fabs(s - (i == j ? 1.0 : 0.0)));
      }

    const double h_fd = 1e-6;
    for (int v = 0; v < d; ++v) {
      std::vector<double> unit(d, 0.0);
      unit[v] = 1.0;
      const auto fwd = coordinates(group_mul(lam, p, coordinate_ray(n, unit, h_fd)));
      const auto bwd = coordinates(group_mul(lam, p, coordinate_ray(n, unit, -h_fd)));
      for (int i = 0; i < d; ++i)
        worst_fd = std::max(worst_fd, std::fabs((fwd[i] - bwd[i]) / (2 * h_fd) - f[i][v]));
    }

    const auto metric = metric_at(lam, p);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        double s = 0.0;
        for (int u = 0; u < d; ++u)
          for (int v = 0; v < d; ++v)
            s += g[u][a] * kq.at(u, v).convert_to<double>() * g[v][b];
        worst_metric = std::max(worst_metric, std::fabs(s - metric[a][b]));
      }

    const auto got = christoffels_at(lam, cd, p, o.fd_step);
    const auto want = christoffels_expected(lam, cd, p);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int x = 0; x < d; ++x)
          worst_gamma = std::max(worst_gamma, std::fabs(got[a][b][x] - want[a][b][x]));
  }

  line("frame-inverse", worst_inverse <= 1e-12, "max residual " + std::to_string(worst_inverse));
  line("frame-finite-difference", worst_fd <= 1e-6, "max residual " + std::to_string(worst_fd));
  line("metric-pullback", worst_metric <= 1e-12, "max residual " + std::to_string(worst_metric));
  line("christoffel-closed-form", worst_gamma <= o.tol,
       "max residual " + std::to_string(worst_gamma));
  return all_ok ? 0 : 1;
}

int run(int argc, char** argv) {
  Opts o;
  CLI::App app{
      "Oscillator-algebra workbench: exact structure constants, identity checks, "
      "solvers, product classification, and geometry verification."};
  app.require_subcommand(1);

  const auto add_lambda = [&o](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--lambda", o.lambda_text,
                                "Frequencies as comma-separated rationals, e.g. 1,3/2,4");
    if (required) opt->required();
  };
  const auto add_out = [&o](CLI::App* cmd) {
    cmd->add_option("--out", o.out_path, "Write the JSON to this file instead of stdout");
  };

  CLI::App* build = app.add_subcommand("build", "Construct structures and emit them as JSON");
  build->require_subcommand(1);
  CLI::App* build_osc = build->add_subcommand("oscillator", "Bracket for the frequency list");
  add_lambda(build_osc);
  add_out(build_osc);
  CLI::App* build_prod =
      build->add_subcommand("product", "Deformed product: bracket plus the central square");
  add_lambda(build_prod);
  build_prod->add_option("--c", o.c_text, "Deformation coefficient (rational or symbol)");
  add_out(build_prod);
  CLI::App* build_form = build->add_subcommand("form", "Invariant Lorentzian form");
  add_lambda(build_form);
  add_out(build_form);
  CLI::App* build_cop = build->add_subcommand("coproduct", "Coproduct from (gamma, r, u0, mu)");
  add_lambda(build_cop);
  build_cop->add_option("--gamma", o.gamma_text, "Central-square coefficient");
  build_cop->add_option("--r", o.r_spec, "Skew tensor, e.g. \"a:e1^ê1\" (ASCII alias ^e1)")
      ->required();
  build_cop->add_option("--u0", o.u0_spec, "Vector, e.g. \"e1\" or \"1/2:e1,-1:ê1\"");
  build_cop->add_option("--mu", o.mu_text, "One entry per frequency");
  add_out(build_cop);

  CLI::App* check = app.add_subcommand("check", "Run identity checks; exit 0 iff all pass");
  check->require_subcommand(1);
  CLI::App* chk_jacobi = check->add_subcommand("jacobi", "Bracket Jacobi identity");
  add_lambda(chk_jacobi, false);
  chk_jacobi->add_option("--in", o.in_path, "Bracket JSON file");
  add_out(chk_jacobi);
  CLI::App* chk_poisson =
      check->add_subcommand("poisson", "Compatibility of the bracket with a commutative product");
  add_lambda(chk_poisson, false);
  chk_poisson->add_option("--c", o.c_text, "Coefficient for the built-in product");
  chk_poisson->add_option("--in", o.in_path,
                          "Product JSON file (the circ when --lambda is given, else split)");
  add_out(chk_poisson);
  CLI::App* chk_leibniz =
      check->add_subcommand("leibniz", "Left and right multiplications are derivations");
  add_lambda(chk_leibniz, false);
  chk_leibniz->add_option("--c", o.c_text, "Coefficient for the built-in product");
  chk_leibniz->add_option("--in", o.in_path, "Product JSON file");
  add_out(chk_leibniz);
  CLI::App* chk_bialg =
      check->add_subcommand("bialgebra", "Six-condition coproduct compatibility verdict");
  add_lambda(chk_bialg);
  chk_bialg->add_option("--c", o.c_text, "Product deformation coefficient");
  chk_bialg->add_option("--gamma", o.gamma_text, "Central-square coefficient");
  chk_bialg->add_option("--r", o.r_spec, "Skew tensor spec")->required();
  chk_bialg->add_option("--u0", o.u0_spec, "Vector spec");
  chk_bialg->add_option("--mu", o.mu_text, "One entry per frequency");
  add_out(chk_bialg);
  CLI::App* chk_rcond = check->add_subcommand("r-condition", "Compatibility residual on r");
  add_lambda(chk_rcond);
  chk_rcond->add_option("--r", o.r_spec, "Skew tensor spec")->required();
  chk_rcond->add_option("--mu", o.mu_text, "One entry per frequency");
  add_out(chk_rcond);

  CLI::App* solve = app.add_subcommand("solve", "Exact solution spaces");
  solve->require_subcommand(1);
  CLI::App* slv_forms =
      solve->add_subcommand("invariant-forms", "Symmetric forms invariant under the bracket");
  add_lambda(slv_forms);
  add_out(slv_forms);
  CLI::App* slv_der = solve->add_subcommand("derivations", "Derivations with a forced kernel");
  add_lambda(slv_der);
  slv_der->add_option("--kernel", o.kernel_text, "Labels forced to zero (default e0,e-1)");
  add_out(slv_der);

  CLI::App* classify =
      app.add_subcommand("classify", "Compatible-product classification with sampled exclusion");
  add_lambda(classify);
  classify->add_option("--seed", o.seed, "Sampling seed");
  classify->add_option("--samples", o.samples, "Off-family samples to draw");
  add_out(classify);

  CLI::App* geometry = app.add_subcommand("geometry", "Differential-geometric consequences");
  geometry->require_subcommand(1);
  CLI::App* geo_verify =
      geometry->add_subcommand("verify", "Exact invariants plus coordinate cross-checks");
  add_lambda(geo_verify);
  geo_verify->add_option("--c", o.c_text, "Deformation coefficient (rational)");
  geo_verify->add_option("--seed", o.seed, "Seed for the sampled points");
  geo_verify->add_option("--fd-step", o.fd_step, "Finite-difference step");
  geo_verify->add_option("--tol", o.tol, "Tolerance for the Christoffel comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (build_osc->parsed()) return cmd_build_oscillator(o);
  if (build_prod->parsed()) return cmd_build_product(o);
  if (build_form->parsed()) return cmd_build_form(o);
  if (build_cop->parsed()) return cmd_build_coproduct(o);
  if (chk_jacobi->parsed()) return cmd_check_jacobi(o);
  if (chk_poisson->parsed()) return cmd_check_poisson(o);
  if (chk_leibniz->parsed()) return cmd_check_leibniz(o);
  if (chk_bialg->parsed()) return cmd_check_bialgebra(o);
  if (chk_rcond->parsed()) return cmd_check_r_condition(o);
  if (slv_forms->parsed()) return cmd_solve_invariant_forms(o);
  if (slv_der->parsed()) return cmd_solve_derivations(o);
  if (classify->parsed()) return cmd_classify(o);
  if (geo_verify->parsed()) return cmd_geometry_verify(o);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
