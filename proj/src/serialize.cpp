#include "delcode/serialize.hpp"

namespace delcode {

using nlohmann::json;

std::string provenance_tag(const Provenance& p) {
    std::string tag(to_string(p.source));
    if (p.row != 0) tag += ":" + std::to_string(p.row);
    return tag;
}

json to_json(const DominancePair& pair) { return {{"u", pair.u.str()}, {"v", pair.v.str()}}; }

json to_json(const FilteredInstance& f) {
    return {{"source", provenance_tag({f.source, f.row})},
            {"m", f.m},
            {"p", f.p},
            {"u", f.u.str()},
            {"v", f.v.str()}};
}

json to_json(const CharacterizationReport& report) {
    json missing = json::array();
    for (const auto& p : report.missing) missing.push_back(to_json(p));
    json spurious = json::array();
    for (const auto& p : report.spurious) spurious.push_back(to_json(p));
    json filtered = json::array();
    for (const auto& f : report.filtered) filtered.push_back(to_json(f));
    return {{"n", report.n},
            {"t", report.t},
            {"brute_count", report.brute_count},
            {"generated_count", report.generated_count},
            {"missing", std::move(missing)},
            {"spurious", std::move(spurious)},
            {"filtered", std::move(filtered)}};
}

json to_json(const Code& code) {
    json words = json::array();
    for (const auto& w : code) words.push_back(w.str());
    return words;
}

json to_json(const SearchResult& result) {
    return {{"optimum", result.optimum},
            {"witness", to_json(result.witness)},
            {"node_count", result.node_count},
            {"wall_time_ms", result.wall_time.count()},
            {"exhausted", result.exhausted}};
}

json to_json(const EnumerationResult& result) {
    json codes = json::array();
    for (const auto& c : result.codes) codes.push_back(to_json(c));
    return {{"optimum", result.optimum},
            {"codes", std::move(codes)},
            {"node_count", result.node_count},
            {"wall_time_ms", result.wall_time.count()},
            {"exhausted", result.exhausted}};
}

}  // namespace delcode
