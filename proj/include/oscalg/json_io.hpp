#pragma once

// JSON round-tripping for algebras, coproducts, forms, wedge tensors and the
// check/classify reports. Files carry schema_version 1; readers reject
// anything else. Dumps are deterministic: alphabetical keys, two-space indent.
//
// Bracket files store only the i < j triples and readers restore the
// antisymmetric closure; product and coproduct files store every entry.

#include "oscalg/bialgebra.hpp"
#include "oscalg/classify.hpp"

#include "json.hpp"

#include <string>

namespace oscalg {

inline constexpr int kSchemaVersion = 1;

nlohmann::json scalar_json(const Rat& r);
Rat scalar_from_json(const nlohmann::json& j);

// Constants dump as "p/q" strings, anything else structurally.
nlohmann::json poly_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// role: "bracket" (sparse skew half) or "product" (all entries).
nlohmann::json product_json(const BilinearMap& p, const std::string& role);
BilinearMap product_from_json(const nlohmann::json& j);
std::string product_role(const nlohmann::json& j);

nlohmann::json coproduct_json(const Coproduct& d);
Coproduct coproduct_from_json(const nlohmann::json& j);

nlohmann::json form_json(const BilinearForm& f);
BilinearForm form_from_json(const nlohmann::json& j);

// Wedge tensor as its j < k pairs.
nlohmann::json rtensor_json(const RTensor& r);
RTensor rtensor_from_json(const nlohmann::json& j);

nlohmann::json report_json(const CheckReport& r);
nlohmann::json bialgebra_report_json(const LeibnizBialgebraReport& r);
nlohmann::json classify_report_json(const ClassifyReport& r);

std::string dump_json(const nlohmann::json& j);
void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace oscalg
