#include "pgcodes/io.hpp"

#include "pgcodes/error.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace pgcodes::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <typename T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(std::string("field \"") + key + "\": " + e.what());
    }
}

json coords_json(std::span<const gf::Elem> v) { return json(std::vector<gf::Elem>(v.begin(), v.end())); }

json points_json(const geom::AmbientSpace& space, const PointSet& s) {
    json pts = json::array();
    for (auto i : s.members()) pts.push_back(coords_json(space.coords(i)));
    return pts;
}

std::uint32_t point_from_json(const json& row, const geom::AmbientSpace& space) {
    std::vector<gf::Elem> v;
    try {
        v = row.get<std::vector<gf::Elem>>();
    } catch (const json::exception& e) {
        bad(std::string("point: ") + e.what());
    }
    if (v.size() != space.vector_dim()) bad("point has " + std::to_string(v.size()) + " coordinates");
    bool nonzero = false;
    for (auto x : v) {
        if (x >= space.q()) bad("coordinate " + std::to_string(x) + " outside the field");
        nonzero |= x != 0;
    }
    if (!nonzero) bad("zero vector is not a point");
    return space.index_of(v);
}

}  // namespace

json ambient_to_json(const geom::AmbientSpace& space) {
    const auto& f = space.field();
    json j{{"n", space.n()}, {"p", f.p()}, {"h", f.h()}, {"modulus", f.modulus()}};
    if (!f.canonical()) j["canonical"] = false;
    return j;
}

geom::SpacePtr ambient_from_json(const json& j) {
    const auto n = get<int>(j, "n");
    const auto p = get<std::uint32_t>(j, "p");
    const auto h = get<std::uint32_t>(j, "h");
    if (n < 1 || n > 16) bad("n out of range");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = get<std::vector<std::uint32_t>>(j, "modulus");
    return geom::AmbientSpace::create(n, gf::field_create(p, h, modulus));
}

json point_set_to_json(const geom::AmbientSpace& space, const PointSet& s) {
    auto j = ambient_to_json(space);
    j["points"] = points_json(space, s);
    return j;
}

LoadedSet point_set_from_json(const json& j) {
    auto space = ambient_from_json(j);
    auto pts = point_set_from_json(j, *space);
    return {std::move(space), std::move(pts)};
}

PointSet point_set_from_json(const json& j, const geom::AmbientSpace& space) {
    if (j.is_object() && j.contains("n")) {
        const auto& f = space.field();
        if (get<int>(j, "n") != space.n() || get<std::uint32_t>(j, "p") != f.p() || get<std::uint32_t>(j, "h") != f.h())
            bad("point set belongs to a different ambient space");
        if (j.contains("modulus") && get<std::vector<std::uint32_t>>(j, "modulus") != f.modulus())
            bad("point set uses a different modulus");
    }
    const json& rows = j.is_array() ? j : j.contains("points") ? j.at("points") : json();
    if (!rows.is_array()) bad("missing field \"points\"");
    PointSet s(space.num_points());
    for (const auto& row : rows) s.insert(point_from_json(row, space));
    return s;
}

json subspace_to_json(const geom::Subspace& u) {
    json rows = json::array();
    for (const auto& r : u.basis()) rows.push_back(r);
    return rows;
}

geom::Subspace subspace_from_json(const json& j, const geom::AmbientSpace& space) {
    if (!j.is_array()) bad("subspace must be a list of rows");
    std::vector<geom::Coords> rows;
    for (const auto& r : j) {
        geom::Coords v;
        try {
            v = r.get<geom::Coords>();
        } catch (const json::exception& e) {
            bad(std::string("subspace row: ") + e.what());
        }
        if (v.size() != space.vector_dim()) bad("subspace row has the wrong length");
        for (auto x : v)
            if (x >= space.q()) bad("coordinate outside the field");
        rows.push_back(std::move(v));
    }
    return space.span_vectors(std::move(rows));
}

json code_vector_to_json(const codes::CodeVector& c) {
    return json{{"ambient", ambient_to_json(c.ambient())},
                {"values", std::vector<std::uint8_t>(c.values().begin(), c.values().end())}};
}

codes::CodeVector code_vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient")) bad("missing field \"ambient\"");
    auto space = ambient_from_json(j.at("ambient"));
    const auto raw = get<std::vector<int>>(j, "values");
    std::vector<std::uint8_t> values;
    for (auto v : raw) {
        if (v < 0 || static_cast<std::uint32_t>(v) >= space->p()) bad("value outside [0,p)");
        values.push_back(static_cast<std::uint8_t>(v));
    }
    if (values.size() != space->num_points()) bad("values length differs from the number of points");
    return codes::CodeVector(std::move(space), std::move(values));
}

json hypercylinder_to_json(const geom::AmbientSpace& space, const evensets::Hypercylinder& h) {
    auto j = point_set_to_json(space, h.points);
    j["witness"] = json{{"vertex", subspace_to_json(h.vertex)},
                        {"base_plane", subspace_to_json(h.base_plane)},
                        {"hyperoval", points_json(space, h.base_hyperoval)}};
    return j;
}

json spectrum_to_json(const evensets::SecantSpectrum& s) {
    json counts = json::object();
    for (const auto& [i, c] : s.by_count) counts[std::to_string(i)] = c;
    return json{{"dimension", s.dimension}, {"counts", counts}, {"total", s.total()}};
}

std::string spectrum_to_csv(const evensets::SecantSpectrum& s) {
    std::ostringstream out;
    out << "dimension,i,count\n";
    for (const auto& [i, c] : s.by_count) out << s.dimension << ',' << i << ',' << c << '\n';
    return out.str();
}

json report_to_json(const geom::AmbientSpace* space, const classify::ClassificationReport& r, bool reproducible) {
    json j{{"kind", r.kind}, {"params", r.params}, {"count", r.count}, {"nodes", r.nodes}};
    if (!r.tallies.empty()) j["tallies"] = r.tallies;
    j["violations"] = r.violations;
    if (r.certificates && space) {
        json certs = json::array();
        for (const auto& s : *r.certificates) certs.push_back(points_json(*space, s));
        j["certificates"] = std::move(certs);
    }
    if (!reproducible) j["wall_time"] = r.wall_time;
    return j;
}

json bound_report_to_json(const classify::BoundReport& r, bool reproducible) {
    json j{{"kind", "bound"},
           {"params", {{"n", r.n}, {"q", r.q}}},
           {"min_weight", r.min_weight},
           {"min_words", r.min_words},
           {"bound", r.bound.str()},
           {"closed_form", r.closed_form.str()},
           {"nodes", r.nodes},
           {"ok", r.ok()}};
    j["expected"] = r.expected ? json(*r.expected) : json();
    if (!reproducible) j["wall_time"] = r.wall_time;
    return j;
}

void write_codewords_jsonl(std::ostream& out, const std::vector<codes::CodeVector>& words) {
    for (const auto& w : words)
        out << json{{"values", std::vector<std::uint8_t>(w.values().begin(), w.values().end())}}.dump() << '\n';
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace pgcodes::io
