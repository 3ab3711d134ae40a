#include "abcov/io.hpp"

#include "abcov/error.hpp"

#include <fstream>
#include <sstream>

namespace abcov {

namespace {

const Json& family_node(const Json& j) {
    if (!j.is_object()) throw InvalidInput("family JSON must be an object");
    if (!j.contains("moduli") && j.contains("family")) return j.at("family");
    return j;
}

std::vector<std::int64_t> int_array(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InvalidInput(what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput(what + " must contain only integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

}  // namespace

CoveringMatrix matrix_from_json(const Json& root) {
    const Json& j = family_node(root);
    if (!j.contains("moduli")) throw InvalidInput("family JSON lacks \"moduli\"");
    if (!j.contains("columns")) throw InvalidInput("family JSON lacks \"columns\"");
    ModuliVector moduli(int_array(j.at("moduli"), "\"moduli\""));
    const Json& cols = j.at("columns");
    if (!cols.is_array()) throw InvalidInput("\"columns\" must be an array of columns");
    std::vector<std::vector<std::int64_t>> columns;
    for (const auto& c : cols) columns.push_back(int_array(c, "each column"));
    return CoveringMatrix(std::move(moduli), columns);
}

std::optional<Character> sigma_from_json(const Json& root, const ModuliVector& moduli) {
    const Json& j = family_node(root);
    if (!j.contains("sigma") || j.at("sigma").is_null()) return std::nullopt;
    return character_from_json(j.at("sigma"), moduli);
}

Json to_json(const CoveringMatrix& m) {
    Json j;
    j["moduli"] = std::vector<std::int64_t>(m.moduli().values().begin(), m.moduli().values().end());
    j["columns"] = m.columns();
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Json to_json(const Character& c) {
    return std::vector<std::int64_t>(c.components().begin(), c.components().end());
}

Character character_from_json(const Json& j, const ModuliVector& moduli) {
    if (j.is_string()) return Character::parse(j.get<std::string>(), moduli);
    return Character(moduli, int_array(j, "character"));
}

Json to_json(const Rational& q) {
    if (q.is_integer()) return q.num();
    return q.str();
}

Json to_json(const ValidationReport& r) {
    Json j;
    j["valid"] = r.valid;
    j["totally_ramified"] = r.totally_ramified;
    j["group_is_full_product"] = r.group_is_full_product;
    j["messages"] = r.messages;
    return j;
}

Json to_json(const PrymProfile& p, const DoubleCoverClass& dc) {
    Json j;
    j["genus"] = p.genus_tilde;
    j["quotient_genus"] = p.quotient_genus;
    j["prym_dim"] = p.prym_dimension;
    j["fixed_points"] = dc.fixed_point_count;
    j["double_cover_kind"] = std::string(to_string(dc.kind));
    j["sigma_in_column_spans"] = dc.sigma_in_column_spans;
    j["odd_character_count"] = p.odd_characters.size();
    return j;
}

Json to_json(const EigenspaceTable& t) {
    Json rows = Json::array();
    for (const auto& [chi, d] : t) rows.push_back({{"character", to_json(chi)}, {"dim", d}});
    return rows;
}

Json to_json(const EigenformDescriptor& e) {
    Json j;
    j["character"] = to_json(e.character);
    j["nu"] = e.nu;
    j["floor_exponents"] = e.floor_exponents;
    return j;
}

Json to_json(const HiggsRankProfile& p, const FlatBound& f) {
    Json rows = Json::array();
    for (const auto& [chi, r] : p.ranks)
        rows.push_back({{"character", to_json(chi)},
                        {"e10", r.e10},
                        {"e01", r.e01},
                        {"flat_lower_bound", f.bounds.at(chi)}});
    Json j;
    j["ranks"] = std::move(rows);
    j["total_e10"] = p.total_e10;
    j["flat_total"] = f.total;
    return j;
}

Json to_json(const GaloisOrbitSet& o) {
    Json orbits = Json::array();
    for (const auto& orbit : o.orbits) {
        Json members = Json::array();
        for (const auto& chi : orbit) members.push_back(to_json(chi));
        orbits.push_back(std::move(members));
    }
    Json j;
    j["acting_group_order"] = o.acting_group_order;
    j["orbits"] = std::move(orbits);
    return j;
}

}  // namespace abcov
