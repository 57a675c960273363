#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "paralg/algebra.hpp"
#include "paralg/fock.hpp"
#include "paralg/relations.hpp"
#include "paralg/verify.hpp"

namespace paralg {

using Json = nlohmann::json;

// Algebra spec file. Omitted brackets are zero; the loader derives missing
// reversed orders from the sign rule and records a warning for every stored
// pair that conflicts with it (the sign-rule checker will report those too).
Json algebra_to_json(const AlgebraSpec& spec, Json meta = Json::object());
AlgebraSpec algebra_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);

// Representation manifest: layout plus generator triplets sorted by (row, col).
Json rep_to_json(const GreenRep& rep);
GreenRep rep_from_json(const Json& j);

RelationSet relation_set_from_json(const Json& j);

Json report_to_json(const ResidualReport& report);
Json report_to_json(const CheckReport& report, const AlgebraSpec& spec);
Json report_to_json(const ExtractionResult& result);
Json report_to_json(const ClassificationReport& report);
Json report_to_json(const SpectralReport& report);

Json load_json_file(const std::string& path);            // structural_error on failure
void write_json_file(const std::string& path, const Json& j);

}  // namespace paralg
