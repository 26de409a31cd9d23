#ifndef NODALSTAB_IO_HPP
#define NODALSTAB_IO_HPP

#include <string>

#include "json.hpp"

#include "nodalstab/cone_geometry.hpp"
#include "nodalstab/filtration_calculus.hpp"
#include "nodalstab/git_weights.hpp"

// JSON documents. Rationals travel as strings "p/q"; integers may be given as
// JSON numbers. Support tuples are 1-based, component indices 0-based.
namespace nodalstab::io {

using json = nlohmann::json;

/// Throws Error(ParseError) with the byte offset on malformed text.
json parse_text(const std::string& text);

json rational_json(const Rational& value);
json rational_array(const std::vector<Rational>& values);
Rational rational_from(const json& j, const std::string& path);

CurveData parse_curve(const json& doc);
SheafData parse_sheaf(const json& j, const std::string& path);
SubsheafRecord parse_step(const json& j, const std::string& path);
/// Reads the ambient sheaf from "ambient" or, failing that, "sheaf".
/// "flags" and "kappa" are optional.
SwampInstance parse_swamp(const json& doc);

json to_json(const SheafData& sheaf);
json to_json(const SubsheafRecord& step);
json to_json(const SwampInstance& inst);

struct BlockInput {
  BlockGroupData group;
  WeightSupport support;
};
BlockInput parse_blocks(const json& doc);

json to_json(const ShapeVerdict& v);
json to_json(const BoundsRecord& b);
json to_json(const WallReport& w);
json to_json(const BlockLemmaReport& r);

}  // namespace nodalstab::io

#endif
