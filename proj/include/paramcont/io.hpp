#pragma once

#include <string>

#include "json.hpp"
#include "paramcont/axioms.hpp"
#include "paramcont/core.hpp"
#include "paramcont/maxtheorem.hpp"
#include "paramcont/verify.hpp"

namespace paramcont::io {

using Json = nlohmann::ordered_json;

Json space_to_json(const SampledSpace& space);
SampledSpace space_from_json(const Json& j);

Json prefs_to_json(const PreferenceField& field, const AlternativeSet& alts,
                   const std::string& space_ref);
std::pair<PreferenceField, AlternativeSet> prefs_from_json(const Json& j);

Json utility_to_json(const UtilityField& u);
UtilityField utility_from_json(const Json& j);

Json alts_to_json(const AlternativeSet& alts);
AlternativeSet alts_from_json(const Json& j);

Json pw_grid_to_json(const PriceWealthGrid& grid);
PriceWealthGrid pw_grid_from_json(const Json& j);

Json axiom_report_to_json(const AxiomReport& report);
Json modulus_report_to_json(const ModulusReport& report);
Json obstruction_report_to_json(const ObstructionReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

/// FNV-1a 64-bit content digest, hex encoded.
std::string content_digest(const std::string& bytes);

std::string modulus_csv(const ModulusReport& report, const SampledSpace& space,
                        const UtilityField& u);
std::string obstruction_csv(const ObstructionReport& report);
std::string value_csv(const std::vector<double>& value, const SampledSpace& space);

}  // namespace paramcont::io
