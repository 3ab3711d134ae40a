#pragma once

#include "abcov/arith.hpp"
#include "abcov/cover.hpp"
#include "abcov/higgs.hpp"
#include "abcov/prym.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace abcov {

using Json = nlohmann::ordered_json;

/*
 * File format of a family:
 *
 *   {"moduli": [10, 5], "columns": [[1, 0], [1, 0], ...], "sigma": [5, 0]}
 *
 * "sigma" is optional. Unknown keys are ignored, so analyze output and
 * certificates (whose family sits under "family") are accepted back.
 */
CoveringMatrix matrix_from_json(const Json& j);
std::optional<Character> sigma_from_json(const Json& j, const ModuliVector& moduli);
Json to_json(const CoveringMatrix& m);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json to_json(const Character& c);
Character character_from_json(const Json& j, const ModuliVector& moduli);
// Integers as numbers, everything else as "n/d".
Json to_json(const Rational& q);

Json to_json(const ValidationReport& r);
Json to_json(const PrymProfile& p, const DoubleCoverClass& dc);
Json to_json(const EigenspaceTable& t);
Json to_json(const EigenformDescriptor& e);
Json to_json(const HiggsRankProfile& p, const FlatBound& f);
Json to_json(const GaloisOrbitSet& o);

}  // namespace abcov
