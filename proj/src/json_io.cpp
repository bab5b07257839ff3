#include "oscalg/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace oscalg {

namespace {

using nlohmann::json;

void require_schema(const json& j) {
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer() ||
      j["schema_version"].get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported or missing schema_version");
}

Basis basis_from_json(const json& j) {
  return make_basis(j.at("basis").get<std::vector<std::string>>());
}

json basis_json(const Basis& b) { return json(b.labels); }

}  // namespace

json scalar_json(const Rat& r) { return json(rat_str(r)); }

Rat scalar_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("scalar must be a \"p/q\" string");
  return rat_parse(j.get<std::string>());
}

json poly_json(const Poly& p) {
  if (p.is_constant()) return scalar_json(p.is_zero() ? Rat(0) : p.constant_value());
  json terms = json::array();
  for (const Poly::Term& t : p.terms())
    terms.push_back(json{{"exps", t.exps}, {"coeff", rat_str(t.coeff)}});
  return json{{"vars", p.vars()}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
  if (j.is_string()) return Poly(scalar_from_json(j));
  const auto vars = j.at("vars").get<std::vector<std::string>>();
  Poly out;
  for (const json& tj : j.at("terms")) {
    const auto exps = tj.at("exps").get<std::vector<unsigned>>();
    if (exps.size() != vars.size())
      throw std::invalid_argument("term exponent count does not match vars");
    Poly term(scalar_from_json(tj.at("coeff")));
    for (std::size_t v = 0; v < vars.size(); ++v)
      for (unsigned e = 0; e < exps[v]; ++e) term *= Poly::variable(vars[v]);
    out += term;
  }
  return out;
}

json product_json(const BilinearMap& p, const std::string& role) {
  if (role != "bracket" && role != "product")
    throw std::invalid_argument("role must be bracket or product");
  if (role == "bracket" && !p.is_antisymmetric())
    throw std::invalid_argument("bracket role requires an antisymmetric map");
  json entries = json::array();
  for (const auto& [i, j, k, c] : p.entries()) {
    if (role == "bracket" && i >= j) continue;
    entries.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"coeff", poly_json(c)}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"role", role},
              {"dim", p.dim()},
              {"basis", basis_json(p.basis())},
              {"product", entries}};
}

std::string product_role(const json& j) {
  require_schema(j);
  const std::string role = j.at("role").get<std::string>();
  if (role != "bracket" && role != "product")
    throw std::invalid_argument("role must be bracket or product");
  return role;
}

BilinearMap product_from_json(const json& j) {
  const std::string role = product_role(j);
  const Basis basis = basis_from_json(j);
  if (j.at("dim").get<int>() != basis.dim())
    throw std::invalid_argument("dim does not match basis length");
  BilinearMap p(basis);
  for (const json& e : j.at("product")) {
    const int i = e.at("i").get<int>();
    const int jj = e.at("j").get<int>();
    const int k = e.at("k").get<int>();
    const Poly c = poly_from_json(e.at("coeff"));
    if (role == "bracket") {
      if (i >= jj) throw std::invalid_argument("bracket file must store i < j triples");
      p.add(i, jj, k, c);
      p.add(jj, i, k, -c);
    } else {
      p.add(i, jj, k, c);
    }
  }
  return p;
}

json coproduct_json(const Coproduct& d) {
  json entries = json::array();
  for (const auto& [i, j, k, c] : d.entries())
    entries.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"coeff", poly_json(c)}});
  return json{{"schema_version", kSchemaVersion},
              {"role", "coproduct"},
              {"dim", d.basis().dim()},
              {"basis", basis_json(d.basis())},
              {"entries", entries}};
}

Coproduct coproduct_from_json(const json& j) {
  require_schema(j);
  if (j.at("role").get<std::string>() != "coproduct")
    throw std::invalid_argument("expected role coproduct");
  const Basis basis = basis_from_json(j);
  if (j.at("dim").get<int>() != basis.dim())
    throw std::invalid_argument("dim does not match basis length");
  Coproduct d(basis);
  for (const json& e : j.at("entries"))
    d.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
          poly_from_json(e.at("coeff")));
  return d;
}

json form_json(const BilinearForm& f) {
  const char* sym = f.symmetry() == FormSymmetry::symmetric ? "symmetric"
                    : f.symmetry() == FormSymmetry::skew    ? "skew"
                                                            : "none";
  json rows = json::array();
  for (int i = 0; i < f.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < f.dim(); ++k) row.push_back(scalar_json(f.at(i, k)));
    rows.push_back(row);
  }
  return json{{"schema_version", kSchemaVersion},
              {"role", "form"},
              {"basis", basis_json(f.basis())},
              {"symmetry", sym},
              {"entries", rows}};
}

BilinearForm form_from_json(const json& j) {
  require_schema(j);
  if (j.at("role").get<std::string>() != "form")
    throw std::invalid_argument("expected role form");
  const Basis basis = basis_from_json(j);
  const std::string sym = j.at("symmetry").get<std::string>();
  FormSymmetry s = FormSymmetry::none;
  if (sym == "symmetric") s = FormSymmetry::symmetric;
  else if (sym == "skew") s = FormSymmetry::skew;
  else if (sym != "none") throw std::invalid_argument("unknown symmetry tag");
  const json& rows = j.at("entries");
  MatQ m(basis.dim(), basis.dim());
  if (static_cast<int>(rows.size()) != basis.dim())
    throw std::invalid_argument("form row count mismatch");
  for (int i = 0; i < basis.dim(); ++i) {
    if (static_cast<int>(rows[i].size()) != basis.dim())
      throw std::invalid_argument("form column count mismatch");
    for (int k = 0; k < basis.dim(); ++k) m.at(i, k) = scalar_from_json(rows[i][k]);
  }
  return BilinearForm(basis, std::move(m), s);
}

json rtensor_json(const RTensor& r) {
  json pairs = json::array();
  const MatP& m = r.matrix();
  for (int j = 0; j < m.rows(); ++j)
    for (int k = j + 1; k < m.cols(); ++k)
      if (!m.at(j, k).is_zero())
        pairs.push_back(json{{"j", j}, {"k", k}, {"coeff", poly_json(m.at(j, k))}});
  return json{{"schema_version", kSchemaVersion},
              {"role", "wedge2"},
              {"basis", basis_json(r.basis())},
              {"pairs", pairs}};
}

RTensor rtensor_from_json(const json& j) {
  require_schema(j);
  if (j.at("role").get<std::string>() != "wedge2")
    throw std::invalid_argument("expected role wedge2");
  const Basis basis = basis_from_json(j);
  MatP m(basis.dim(), basis.dim());
  for (const json& e : j.at("pairs")) {
    const int a = e.at("j").get<int>();
    const int b = e.at("k").get<int>();
    if (!(0 <= a && a < b && b < basis.dim()))
      throw std::invalid_argument("wedge pairs must satisfy j < k");
    const Poly c = poly_from_json(e.at("coeff"));
    m.at(a, b) = c;
    m.at(b, a) = -c;
  }
  return RTensor(basis, std::move(m));
}

json report_json(const CheckReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) {
    json residual = json::array();
    for (const Poly& p : v.residual) residual.push_back(poly_json(p));
    violations.push_back(json{{"identity", v.identity},
                              {"at", v.at},
                              {"at_text", v.at_text},
                              {"residual", residual},
                              {"residual_text", v.residual_text}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"check", r.check},
              {"pass", r.pass()},
              {"precondition_ok", r.precondition_ok},
              {"precondition_note", r.precondition_note},
              {"violations", violations}};
}

json bialgebra_report_json(const LeibnizBialgebraReport& r) {
  json conditions = json::array();
  for (std::size_t i = 0; i < r.condition_ok.size(); ++i)
    conditions.push_back(json{{"condition", static_cast<int>(i) + 1},
                              {"ok", r.condition_ok[i]}});
  return json{{"schema_version", kSchemaVersion},
              {"check", "leibniz_bialgebra"},
              {"pass", r.pass()},
              {"conditions", conditions},
              {"details", report_json(r.details)}};
}

json classify_report_json(const ClassifyReport& r) {
  json checkpoints = json::array();
  for (const ClassifyCheckpoint& c : r.checkpoints)
    checkpoints.push_back(json{{"name", c.name}, {"ok", c.ok}});
  return json{{"schema_version", kSchemaVersion},
              {"check", "classify"},
              {"linear_dim", r.linear_dim},
              {"family_contained", r.family_contained},
              {"samples_total", r.samples_total},
              {"samples_excluded", r.samples_excluded},
              {"checkpoints", checkpoints},
              {"completeness_asserted", r.completeness_asserted},
              {"seed", r.seed},
              {"pass", r.family_contained && r.samples_excluded == r.samples_total &&
                           r.checkpoints_ok()}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << dump_json(j);
  if (!out) throw std::runtime_error("write failed: " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace oscalg
