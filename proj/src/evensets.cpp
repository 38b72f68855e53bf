#include "pgcodes/evensets.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pgcodes::evensets {

namespace {

void require_even_q(const AmbientSpace& space) {
    if (space.p() != 2)
        throw Error(ErrorKind::OddCharacteristic, "q = " + std::to_string(space.q()) + " is odd");
}

void require_plane(const Subspace& plane) {
    if (plane.dim() != 2) throw Error(ErrorKind::BadDimensions, "expected a plane");
}

// Coordinates of a point of u relative to u's RREF basis.
Coords local_coords(const AmbientSpace& space, const Subspace& u, std::uint32_t point) {
    auto v = space.coords(point);
    Coords out;
    for (const auto& row : u.basis()) {
        const auto piv = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto x) { return x; }) -
                                                  row.begin());
        out.push_back(v[piv]);
    }
    return out;
}

// Point of the plane with local coordinates x, after applying frame (row vector times matrix).
std::uint32_t map_local(const AmbientSpace& space, const Subspace& plane, const std::vector<Coords>& frame,
                        const Coords& x) {
    const auto& f = space.field();
    Coords y = x;
    if (!frame.empty()) {
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) y[j] = f.add(y[j], f.mul(x[i], frame[i][j]));
    }
    Coords v(space.vector_dim(), 0);
    const auto& basis = plane.basis();
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(y[i], basis[i][j]));
    }
    return space.index_of(v);
}

bool no_three_collinear(const AmbientSpace& space, const PointSet& set) {
    const auto m = set.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            PointSet line(space.num_points(), space.line_points(m[i], m[j]));
            if (line.intersection_size(set) != 2) return false;
        }
    return true;
}

template <typename Visit>
void for_each_line_set(const AmbientSpace& space, Visit&& visit) {
    if (space.has_line_table()) {
        for (const auto& l : space.lines().sets)
            if (!visit(l)) return;
        return;
    }
    space.for_each_subspace(1, [&](const Subspace& u) { return visit(space.points_of(u)); });
}

}  // namespace

bool is_even_type(const AmbientSpace& space, const PointSet& s) {
    if (!space.has_line_table()) return is_even_type_by_pencils(space, s);
    const auto& lines = space.lines();
    for (auto p : s.members())
        for (auto id : lines.through[p])
            if (lines.sets[id].intersection_size(s) & 1) return false;
    return true;
}

bool is_even_type_by_pencils(const AmbientSpace& space, const PointSet& s) {
    const auto& f = space.field();
    const auto members = s.members();
    const auto pencil = geom::theta(space.n() - 1, space.q());
    Coords v(space.vector_dim());
    for (auto p : members) {
        // each line through p meeting S again is visited once, via its first other S-point
        PointSet seen(space.num_points());
        std::uint64_t lines_met = 0;
        const auto pc = space.coords(p);
        for (auto r : members) {
            if (r == p || seen.contains(r)) continue;
            const auto rc = space.coords(r);
            std::size_t others = 0;
            for (gf::Elem t = 0; t < space.q(); ++t) {
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(rc[j], f.mul(t, pc[j]));
                const auto idx = space.index_of(v);
                if (s.contains(idx)) {
                    seen.insert(idx);
                    ++others;
                }
            }
            if (others % 2 == 0) return false;
            ++lines_met;
        }
        if (lines_met != pencil) return false;  // a tangent line through p
    }
    return true;
}

EvenSet make_even_set(const AmbientSpace& space, PointSet s) {
    const bool ok = is_even_type(space, s);
    return EvenSet{std::move(s), ok};
}

std::uint64_t SecantSpectrum::total() const {
    std::uint64_t t = 0;
    for (const auto& [i, c] : by_count) t += c;
    return t;
}

std::uint64_t SecantSpectrum::weighted_total() const {
    std::uint64_t t = 0;
    for (const auto& [i, c] : by_count) t += i * c;
    return t;
}

SecantSpectrum secant_spectrum(const AmbientSpace& space, const PointSet& s, int d) {
    if (d < 1 || d > space.n() - 1)
        throw Error(ErrorKind::DimensionOutOfRange, "spectrum dimension must lie in [1, n-1]");
    SecantSpectrum out;
    out.dimension = d;
    if (d == 1) {
        for_each_line_set(space, [&](const PointSet& l) {
            ++out.by_count[l.intersection_size(s)];
            return true;
        });
        return out;
    }
    space.for_each_subspace(d, [&](const Subspace& u) {
        ++out.by_count[space.points_of(u).intersection_size(s)];
        return true;
    });
    return out;
}

PointSet conic_points(const AmbientSpace& space, const Subspace& plane, const std::vector<Coords>& frame) {
    require_plane(plane);
    const auto& f = space.field();
    PointSet out(space.num_points());
    for (gf::Elem t = 0; t < space.q(); ++t) out.insert(map_local(space, plane, frame, {1, t, f.mul(t, t)}));
    out.insert(map_local(space, plane, frame, {0, 0, 1}));
    return out;
}

std::uint32_t nucleus(const AmbientSpace& space, const PointSet& conic) {
    require_even_q(space);
    const auto plane = space.span(conic);
    require_plane(plane);
    PointSet common = space.points_of(plane);
    for (const auto& line : lines_of(space, plane)) {
        const auto pts = space.points_of(line);
        if (pts.intersection_size(conic) == 1) common &= pts;
    }
    if (common.size() != 1) throw Error(ErrorKind::NotAHyperoval, "tangent lines are not concurrent");
    return common.members().front();
}

std::optional<PointSet> conic_through(const AmbientSpace& space, const Subspace& plane,
                                      const std::vector<std::uint32_t>& five) {
    require_plane(plane);
    if (five.size() != 5) return std::nullopt;
    PointSet given(space.num_points(), five);
    if (given.size() != 5 || !no_three_collinear(space, given)) return std::nullopt;
    const auto& f = space.field();
    auto monomials = [&](const Coords& x) {
        return Coords{f.mul(x[0], x[0]), f.mul(x[1], x[1]), f.mul(x[2], x[2]),
                      f.mul(x[0], x[1]), f.mul(x[0], x[2]), f.mul(x[1], x[2])};
    };
    std::vector<Coords> eqs;
    for (auto pt : five) {
        if (!space.incident(pt, plane)) return std::nullopt;
        eqs.push_back(monomials(local_coords(space, plane, pt)));
    }
    auto kernel = geom::null_space(f, eqs, 6);
    if (kernel.size() != 1) return std::nullopt;
    const auto& form = kernel.front();
    PointSet out(space.num_points());
    for (auto pt : space.point_list(plane)) {
        const auto m = monomials(local_coords(space, plane, pt));
        gf::Elem val = 0;
        for (std::size_t i = 0; i < 6; ++i) val = f.add(val, f.mul(form[i], m[i]));
        if (val == 0) out.insert(pt);
    }
    if (out.size() != space.q() + 1) return std::nullopt;
    return out;
}

PointSet regular_hyperoval(const AmbientSpace& space, const Subspace& plane, const std::vector<Coords>& frame) {
    require_even_q(space);
    auto out = conic_points(space, plane, frame);
    out.insert(map_local(space, plane, frame, {0, 1, 0}));
    return out;
}

bool is_hyperoval_in(const AmbientSpace& space, const PointSet& o, const Subspace& plane) {
    if (plane.dim() != 2 || o.size() != space.q() + 2) return false;
    if (!o.is_subset_of(space.points_of(plane))) return false;
    return no_three_collinear(space, o);
}

bool is_regular_hyperoval(const AmbientSpace& space, const PointSet& o, const Subspace& plane) {
    if (!is_hyperoval_in(space, o, plane)) return false;
    if (space.q() == 2) return true;
    for (auto n : o.members()) {
        PointSet rest = o;
        rest.erase(n);
        auto m = rest.members();
        m.resize(5);
        auto c = conic_through(space, plane, m);
        if (c && *c == rest) return true;
    }
    return false;
}

Hypercylinder build_hypercylinder(const AmbientSpace& space, const Subspace& vertex, const Subspace& plane,
                                  const PointSet& o) {
    if (vertex.dim() != space.n() - 3 || plane.dim() != 2 || vertex.vector_dim() != space.vector_dim() ||
        plane.vector_dim() != space.vector_dim())
        throw Error(ErrorKind::BadDimensions, "need an (n-3)-dimensional vertex and a plane");
    if (space.join(vertex, plane).rank() != vertex.rank() + 3)
        throw Error(ErrorKind::NotSkew, "vertex and base plane intersect");
    if (!is_hyperoval_in(space, o, plane)) throw Error(ErrorKind::NotAHyperoval, "base set is not a hyperoval of the plane");
    const PointSet vertex_points = space.points_of(vertex);
    PointSet pts(space.num_points());
    for (auto p : o.members()) {
        auto rows = vertex.basis();
        auto c = space.coords(p);
        rows.emplace_back(c.begin(), c.end());
        pts |= space.points_of(space.span_vectors(std::move(rows)));
    }
    pts -= vertex_points;
    return Hypercylinder{vertex, plane, o, std::move(pts)};
}

Hypercylinder random_hypercylinder(const AmbientSpace& space, std::mt19937_64& rng) {
    require_even_q(space);
    if (space.n() < 2) throw Error(ErrorKind::BadDimensions, "hypercylinders need n >= 2");
    const Subspace vertex = space.n() == 2 ? space.empty_space() : geom::random_subspace(space, space.n() - 3, rng);
    const Subspace plane = geom::random_skew_subspace(space, 2, vertex, rng);
    const auto frame = geom::random_invertible(space.field(), 3, rng);
    return build_hypercylinder(space, vertex, plane, regular_hyperoval(space, plane, frame));
}

std::optional<Subspace> recover_vertex(const AmbientSpace& space, const PointSet& s) {
    if (space.q() == 2) return std::nullopt;
    const auto normals = space.disjoint_hyperplane_normals(s);
    if (normals.empty()) return std::nullopt;
    return space.annihilator(normals);
}

std::optional<Hypercylinder> is_hypercylinder(const AmbientSpace& space, const PointSet& s) {
    if (space.p() != 2 || space.n() < 2) return std::nullopt;
    std::uint64_t expected = space.q() + 2;
    for (int i = 0; i < space.n() - 2; ++i) expected *= space.q();
    if (s.size() != expected) return std::nullopt;

    auto attempt = [&](const Subspace& vertex) -> std::optional<Hypercylinder> {
        if (vertex.dim() != space.n() - 3) return std::nullopt;
        std::optional<Subspace> base;
        space.for_each_subspace(2, [&](const Subspace& plane) {
            if (space.join(vertex, plane).rank() != vertex.rank() + 3) return true;
            base = plane;
            return false;
        });
        if (!base) return std::nullopt;
        PointSet o = s & space.points_of(*base);
        if (!is_hyperoval_in(space, o, *base)) return std::nullopt;
        auto h = build_hypercylinder(space, vertex, *base, o);
        if (h.points != s) return std::nullopt;
        return h;
    };

    if (space.q() > 2) {
        auto v = recover_vertex(space, s);
        if (!v) return std::nullopt;
        return attempt(*v);
    }
    // q = 2: the vertex is not determined by the set; try skew candidates in order
    std::optional<Hypercylinder> found;
    space.for_each_subspace(space.n() - 3, [&](const Subspace& v) {
        if (space.points_of(v).intersects(s)) return true;
        found = attempt(v);
        return !found.has_value();
    });
    return found;
}

std::vector<Subspace> lines_of(const AmbientSpace& space, const Subspace& plane) {
    require_plane(plane);
    return space.subspaces_within(plane, 1);
}

PointSet blocking_difference(const AmbientSpace& space, const PointSet& s, const Subspace& plane,
                             const Subspace& line) {
    require_plane(plane);
    if (line.dim() != 1 || space.join(plane, line).rank() != plane.rank())
        throw Error(ErrorKind::LineNotInPlane, "line is not contained in the plane");
    return (space.points_of(plane) & s) ^ space.points_of(line);
}

bool is_blocking(const AmbientSpace& space, const PointSet& b, const Subspace& plane) {
    for (const auto& l : lines_of(space, plane))
        if (!space.points_of(l).intersects(b)) return false;
    return true;
}

bool meets_every_line_oddly(const AmbientSpace& space, const PointSet& b, const Subspace& plane) {
    for (const auto& l : lines_of(space, plane))
        if (space.points_of(l).intersection_size(b) % 2 == 0) return false;
    return true;
}

std::vector<Subspace> redei_lines(const AmbientSpace& space, const PointSet& s, const Subspace& plane) {
    const PointSet in_plane = space.points_of(plane) & s;
    std::vector<Subspace> out;
    for (const auto& l : lines_of(space, plane))
        if ((in_plane - space.points_of(l)).size() == space.q()) out.push_back(l);
    return out;
}

std::vector<std::uint32_t> admissible_subfields(const gf::Field& field, std::size_t m) {
    const std::uint64_t q = field.q();
    std::vector<std::uint32_t> out;
    for (auto s : field.subfield_orders()) {
        if (s == 2 || s == q) continue;
        const std::uint64_t lo = q + 1 - (q - 1) / (s - 1);
        const std::uint64_t hi = q - q / s;
        if (lo <= m && m <= hi) out.push_back(s);
    }
    return out;
}

bool LargeSecantReport::subfield_contradiction() const {
    return std::any_of(large_secants.begin(), large_secants.end(),
                       [](const LargeSecant& l) { return l.admissible_subfields.empty(); });
}

LargeSecantReport large_secant_report(const AmbientSpace& space, const PointSet& s) {
    require_even_q(space);
    LargeSecantReport report;
    for_each_line_set(space, [&](const PointSet& l) {
        const auto m = l.intersection_size(s);
        if (2 * m > space.q()) report.large_secants.push_back({l.members(), m, admissible_subfields(space.field(), m)});
        return true;
    });
    return report;
}

std::optional<std::uint64_t> predicted_four_secants(std::uint64_t size, int n, std::uint32_t q) {
    const auto base = 1 + geom::theta(n - 1, q);
    if (size < base || (size - base) % 2) return std::nullopt;
    return (size - base) / 2;
}

FourSecantCheck four_secant_check(const AmbientSpace& space, const PointSet& s) {
    FourSecantCheck out;
    const auto spectrum = secant_spectrum(space, s, 1);
    out.hypothesis = std::all_of(spectrum.by_count.begin(), spectrum.by_count.end(),
                                 [](const auto& kv) { return kv.first == 0 || kv.first == 2 || kv.first == 4; });
    if (!out.hypothesis) return out;
    out.predicted = predicted_four_secants(s.size(), space.n(), space.q());
    if (!out.predicted) return out;
    const auto& lines = space.lines();
    out.all_points_match = true;
    for (auto p : s.members()) {
        std::uint64_t x = 0;
        for (auto id : lines.through[p])
            if (lines.sets[id].intersection_size(s) == 4) ++x;
        if (x != *out.predicted) out.all_points_match = false;
    }
    return out;
}

}  // namespace pgcodes::evensets
