#pragma once

#include "pgcodes/classify.hpp"
#include "pgcodes/codes.hpp"
#include "pgcodes/evensets.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace pgcodes::io {

using nlohmann::json;

/// {"n","p","h","modulus"}; "canonical": false is added for a non-default modulus.
json ambient_to_json(const geom::AmbientSpace& space);
geom::SpacePtr ambient_from_json(const json& j);

/// Ambient fields plus "points": coordinate rows in ascending index order.
json point_set_to_json(const geom::AmbientSpace& space, const PointSet& s);

struct LoadedSet {
    geom::SpacePtr space;
    PointSet points;
};
LoadedSet point_set_from_json(const json& j);
/// Points against an existing space (ambient fields, if present, must agree).
PointSet point_set_from_json(const json& j, const geom::AmbientSpace& space);

/// RREF rows.
json subspace_to_json(const geom::Subspace& u);
/// Any spanning rows; reduced on load.
geom::Subspace subspace_from_json(const json& j, const geom::AmbientSpace& space);

json code_vector_to_json(const codes::CodeVector& c);
codes::CodeVector code_vector_from_json(const json& j);

/// Point set of the cylinder plus "witness": {"vertex","base_plane","hyperoval"}.
json hypercylinder_to_json(const geom::AmbientSpace& space, const evensets::Hypercylinder& h);

json spectrum_to_json(const evensets::SecantSpectrum& s);
/// "dimension,i,count" header, one row per intersection size.
std::string spectrum_to_csv(const evensets::SecantSpectrum& s);

/// {"kind","params","count","nodes", ...}; wall_time omitted when reproducible.
json report_to_json(const geom::AmbientSpace* space, const classify::ClassificationReport& r, bool reproducible);
json bound_report_to_json(const classify::BoundReport& r, bool reproducible);

/// One {"values": [...]} object per line.
void write_codewords_jsonl(std::ostream& out, const std::vector<codes::CodeVector>& words);

/// Parses text, mapping library errors to ParseError.
json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace pgcodes::io
