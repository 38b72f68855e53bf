#pragma once

// Slow reference computations. They rely only on field arithmetic and the
// point indexing of AmbientSpace, never on line tables, codes or searches.

#include "pgcodes/pointset.hpp"
#include "pgcodes/projgeom.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace pgcodes::oracle {

/// Points of each line, found by closing every pair under linear combination.
std::vector<PointSet> brute_lines(const geom::AmbientSpace& space);

/// Points spanned by the given vectors (all linear combinations).
PointSet closure(const geom::AmbientSpace& space, const std::vector<geom::Coords>& vectors);

/// Number of distinct k-spaces, as spans of (k+1)-tuples of points.
std::uint64_t brute_subspace_count(const geom::AmbientSpace& space, int k);

/// Every subset of the given size meeting each line evenly.
std::vector<PointSet> brute_even_sets(const geom::AmbientSpace& space, std::size_t size);

/// Smallest nonempty size of a set of even type, trying sizes up to max_size. 0 if none.
std::size_t brute_min_even_size(const geom::AmbientSpace& space, std::size_t max_size);

/// (q+2)-subsets of PG(2,q) with no three points collinear.
std::vector<PointSet> brute_hyperovals(std::uint32_t q);

struct ConicCensus {
    std::uint64_t irreducible_forms = 0;  // up to scalars
    std::uint64_t distinct_conics = 0;    // distinct zero sets of those forms
};
/// Runs over every nonzero ternary quadratic form; a form counts when its zero
/// set has q+1 points, not all on one line.
ConicCensus conic_census(std::uint32_t q);

/// Conics through all 5-arcs of PG(2,q), deduplicated; each conic is solved from
/// its five points by brute force over the forms. Zero when no 5-arc exists.
std::uint64_t five_point_conic_dedup(std::uint32_t q);

/// Histogram weight -> number of codewords of the F_p-span of the k-spaces,
/// from every F_p-combination of the generators (zero word included).
std::map<std::size_t, std::uint64_t> brute_weight_distribution(const geom::AmbientSpace& space, int k);

/// Cones over every hyperoval of one plane skew to each vertex point, vertex
/// removed (PG(3,q) only), deduplicated.
std::set<PointSet> construction_hypercylinders(std::uint32_t q);

}  // namespace pgcodes::oracle
