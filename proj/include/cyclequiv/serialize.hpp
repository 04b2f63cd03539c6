#pragma once

#include <string>

#include <json.hpp>

#include "cyclequiv/cells.hpp"
#include "cyclequiv/dellac.hpp"
#include "cyclequiv/rep.hpp"

namespace cyclequiv {

// NilpRep <-> {"n": int, "summands": [{"end": 1..n, "len": >=1, "mult": >=1}]}
// with summands in canonical (end, len) ascending order.
nlohmann::json rep_to_json(const NilpRep& rep);
NilpRep rep_from_json(const nlohmann::json& j);

// AffineDellacConfig <-> {"n":..., "omega":..., "rows":[{"col":..,"k":..} x 2n]}
nlohmann::json dellac_to_json(const AffineDellacConfig& cfg);
AffineDellacConfig dellac_from_json(const nlohmann::json& j);

// PoincarePolynomial <-> {"coeffs": [c0, c1, ...]}
nlohmann::json poly_to_json(const PoincarePolynomial& p);
PoincarePolynomial poly_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace cyclequiv
