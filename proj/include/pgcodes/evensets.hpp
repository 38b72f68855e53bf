#pragma once

#include "pgcodes/pointset.hpp"
#include "pgcodes/projgeom.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace pgcodes::evensets {

using geom::AmbientSpace;
using geom::Coords;
using geom::Subspace;

/// Every line meets S in an even number of points. Uses the line table when
/// present, otherwise groups S by the lines through each of its points.
bool is_even_type(const AmbientSpace& space, const PointSet& s);

/// Table-free variant of is_even_type; always available.
bool is_even_type_by_pencils(const AmbientSpace& space, const PointSet& s);

/// A point set that has passed the even-type check.
struct EvenSet {
    PointSet points;
    bool verified = false;
};

/// Checks s and records the verdict.
EvenSet make_even_set(const AmbientSpace& space, PointSet s);

struct SecantSpectrum {
    int dimension = 1;
    std::map<std::size_t, std::uint64_t> by_count;

    std::uint64_t total() const;
    /// sum over i of i * count_i
    std::uint64_t weighted_total() const;
};

/// Histogram of |U ∩ S| over all subspaces U of dimension d (1 <= d <= n-1).
SecantSpectrum secant_spectrum(const AmbientSpace& space, const PointSet& s, int d);

/// The conic {(1,t,t^2)} ∪ {(0,0,1)} of PG(2,q), mapped into plane through frame.
/// With the default frame (identity) and plane = the full PG(2,q) this is the
/// canonical conic {(s^2,st,t^2)}.
PointSet conic_points(const AmbientSpace& space, const Subspace& plane, const std::vector<Coords>& frame = {});

/// Common point of all tangent lines of a conic (q even). Throws
/// OddCharacteristic for odd q and NotAHyperoval if the tangents are not concurrent.
std::uint32_t nucleus(const AmbientSpace& space, const PointSet& conic);

/// Conic through five points of a plane, no three collinear; nullopt otherwise.
std::optional<PointSet> conic_through(const AmbientSpace& space, const Subspace& plane,
                                      const std::vector<std::uint32_t>& five);

/// Canonical conic plus its nucleus (0,1,0), through the frame into the plane.
/// Throws OddCharacteristic for odd q and BadDimensions unless plane is a plane.
PointSet regular_hyperoval(const AmbientSpace& space, const Subspace& plane, const std::vector<Coords>& frame = {});

/// O is a (q+2)-set in plane with no three points collinear.
bool is_hyperoval_in(const AmbientSpace& space, const PointSet& o, const Subspace& plane);

/// A hyperoval of PG(2,q) with a point whose removal leaves an irreducible conic.
bool is_regular_hyperoval(const AmbientSpace& space, const PointSet& o, const Subspace& plane);

struct Hypercylinder {
    Subspace vertex;
    Subspace base_plane;
    PointSet base_hyperoval;
    PointSet points;
};

/// The cone over O with the given vertex, vertex removed.
/// Throws BadDimensions, NotSkew or NotAHyperoval.
Hypercylinder build_hypercylinder(const AmbientSpace& space, const Subspace& vertex, const Subspace& plane,
                                  const PointSet& o);

/// Random vertex, skew base plane and regular hyperoval under a random frame.
Hypercylinder random_hypercylinder(const AmbientSpace& space, std::mt19937_64& rng);

/// Intersection of all hyperplanes disjoint from S. nullopt when q = 2 or when
/// no hyperplane avoids S.
std::optional<Subspace> recover_vertex(const AmbientSpace& space, const PointSet& s);

/// Witness when S is a hypercylinder: the recovered vertex (for q = 2, the first
/// skew candidate that works), the first skew plane in canonical order and S ∩ plane.
std::optional<Hypercylinder> is_hypercylinder(const AmbientSpace& space, const PointSet& s);

/// The lines of a plane.
std::vector<Subspace> lines_of(const AmbientSpace& space, const Subspace& plane);

/// (plane ∩ S) △ line. Throws LineNotInPlane.
PointSet blocking_difference(const AmbientSpace& space, const PointSet& s, const Subspace& plane,
                             const Subspace& line);
/// Every line of the plane meets B.
bool is_blocking(const AmbientSpace& space, const PointSet& b, const Subspace& plane);
/// Every line of the plane meets B in an odd number of points.
bool meets_every_line_oddly(const AmbientSpace& space, const PointSet& b, const Subspace& plane);

/// Lines l of the plane with |S ∩ plane \ l| = q.
std::vector<Subspace> redei_lines(const AmbientSpace& space, const PointSet& s, const Subspace& plane);

/// Subfield orders s, s != 2 and s != q, with q+1-(q-1)/(s-1) <= m <= q-q/s.
std::vector<std::uint32_t> admissible_subfields(const gf::Field& field, std::size_t m);

struct LargeSecant {
    std::vector<std::uint32_t> line;  // point indices
    std::size_t size = 0;
    std::vector<std::uint32_t> admissible_subfields;
};

struct LargeSecantReport {
    std::vector<LargeSecant> large_secants;
    /// No large secant has an admissible subfield.
    bool subfield_contradiction() const;
    bool at_most_one() const { return large_secants.size() <= 1; }
};

/// Lines with |l ∩ S| > q/2 and their admissible subfield windows. q even.
LargeSecantReport large_secant_report(const AmbientSpace& space, const PointSet& s);

/// Four-secants through each point forced by a set meeting every line in 0, 2 or 4
/// points: |S| = 1 + (theta_{n-1} - x) + 3x. nullopt when that x is not a
/// non-negative integer.
std::optional<std::uint64_t> predicted_four_secants(std::uint64_t size, int n, std::uint32_t q);

struct FourSecantCheck {
    bool hypothesis = false;  // all line intersections in {0,2,4}
    std::optional<std::uint64_t> predicted;
    bool all_points_match = false;
};

/// Applies the counting identity above to S when its lines are 0-, 2- or 4-secant.
FourSecantCheck four_secant_check(const AmbientSpace& space, const PointSet& s);

}  // namespace pgcodes::evensets
