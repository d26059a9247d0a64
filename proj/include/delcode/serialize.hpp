#pragma once

// JSON documents for reports and search results. Words are 0/1 strings.

#include <string>

#include <json.hpp>

#include "delcode/dominance.hpp"
#include "delcode/search.hpp"

namespace delcode {

/// e.g. "table2:17", "trivial-zero:1"
std::string provenance_tag(const Provenance& p);

nlohmann::json to_json(const DominancePair& pair);
nlohmann::json to_json(const FilteredInstance& f);
nlohmann::json to_json(const CharacterizationReport& report);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const EnumerationResult& result);
nlohmann::json to_json(const Code& code);

}  // namespace delcode
