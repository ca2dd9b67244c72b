#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tlc/census.hpp"
#include "tlc/gauss.hpp"
#include "tlc/inflect.hpp"
#include "tlc/ncpd_tree.hpp"

namespace tlc {

using Json = nlohmann::ordered_json;

/// Version tag written into every top-level document.
inline constexpr const char* kSchemaVersion = "1.0";

/// {"k": int, "word": [1-based labels]}
Json to_json(const GaussDiagram& gd);
/// {"n": int, "rotation": [[neighbors], ...]}
Json to_json(const PlaneTree& tree);
/// {"code": text form, "root": node}; node = {"children": [{"edge": ">"|"<"|"-", "children": [...]}, ...]}
Json to_json(const NcpdTree& t);
/// {"lower", "exact" | null, "upper", "jt", "bl", "witness" | null}
Json to_json(const BoundReport& report);
Json to_json(const CensusRow& row);

/// Inverse of to_json(NcpdTree); reads "root" and ignores "code".
/// Throws ParseError on malformed structure.
NcpdTree tree_from_json(const Json& j);

/// Header n,tree_code,p,center,total,orbits,formula,agree then one line per row.
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace tlc
