#pragma once

#include <nlohmann/json.hpp>

#include "cthopf/crossed.hpp"
#include "cthopf/group.hpp"
#include "cthopf/yd.hpp"

namespace cthopf {

using json = nlohmann::ordered_json;

// Scalars serialize as decimal strings: "a" or "a/b" over Q, the residue
// over GF(p); the field is declared once at file level.
json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

json matrix_to_json(const LinMap& m);  // rows; entry [i][j] = coeff of basis i in image of basis j
LinMap matrix_from_json(const nlohmann::json& j, const Field& f);

json hopf_to_json(const FiniteDimHopfAlgebra& h);
FiniteDimHopfAlgebra hopf_from_json(const nlohmann::json& j);  // runs finalize_hopf

json automorphism_to_json(const LinMap& m);
LinMap automorphism_from_json(const nlohmann::json& j, const Field& f);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

json coalgebra_to_json(const Coalgebra& c, const json& meta = json::object());
Coalgebra coalgebra_from_json(const nlohmann::json& j);

json yd_to_json(const YDModule& m);
YDModule yd_from_json(const nlohmann::json& j, const FiniteDimHopfAlgebra& h);

/// Deterministic dump: 2-space indent, trailing newline.
std::string dump_json(const json& j);
void write_json_file(const std::string& path, const json& j);
nlohmann::json load_json_file(const std::string& path);

}  // namespace cthopf
