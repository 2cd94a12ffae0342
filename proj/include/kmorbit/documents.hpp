#pragma once

#include "kmorbit/affine.hpp"

#include "json.hpp"

namespace kmorbit {

/// {"n": 2, "matrix": [["0", "t"], ["0", "0"]], "c": "0", "d": "0"}
/// Leaves are Laurent literals; "c" and "d" default to "0".
AffineElement element_from_json(const nlohmann::json& doc);
nlohmann::json element_to_json(const AffineElement& a);

/// {"z": "1", "matrix": [...]}; the determinant is checked on load.
GroupElement group_from_json(const nlohmann::json& doc, int working_prec = kDefaultWorkingPrecision);
nlohmann::json group_to_json(const GroupElement& g);

nlohmann::json matrix_to_json(const MatK& m);
/// Throws InvalidInput on a non-square or ragged array.
MatK matrix_from_json(const nlohmann::json& rows);

} // namespace kmorbit
