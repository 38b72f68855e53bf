#pragma once

#include "pgcodes/gf.hpp"
#include "pgcodes/pointset.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace pgcodes::geom {

using gf::Elem;
using Coords = std::vector<Elem>;

/// Number of points of PG(n,q): (q^(n+1)-1)/(q-1). theta(-1,q) = 0.
std::uint64_t theta(int n, std::uint64_t q);

/// Number of b-dimensional vector subspaces of F_q^a, exact. Throws
/// BudgetExceeded if the result does not fit in 64 bits.
std::uint64_t gaussian_coefficient(int a, int b, std::uint64_t q);

struct ProjPoint {
    Coords coords;
    std::uint32_t index;
};

/// A projective subspace held as its reduced row-echelon basis. Two values
/// compare equal iff they describe the same point set.
class Subspace {
public:
    Subspace() = default;
    /// rows must already be in RREF with no zero rows.
    Subspace(std::size_t vector_dim, std::vector<Coords> rref_rows)
        : vector_dim_(vector_dim), rows_(std::move(rref_rows)) {}

    /// Projective dimension; -1 for the empty subspace.
    int dim() const noexcept { return static_cast<int>(rows_.size()) - 1; }
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t vector_dim() const noexcept { return vector_dim_; }
    const std::vector<Coords>& basis() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }

    bool operator==(const Subspace&) const = default;
    auto operator<=>(const Subspace&) const = default;

private:
    std::size_t vector_dim_ = 0;
    std::vector<Coords> rows_;
};

/// Lines of the ambient space in canonical subspace order with both
/// incidence directions materialised.
struct LineTable {
    std::vector<std::vector<std::uint32_t>> points_on;  // per line, ascending
    std::vector<PointSet> sets;                         // per line
    std::vector<std::vector<std::uint32_t>> through;    // per point, ascending line ids
};

/// PG(n,q) with its canonical point order. Immutable after construction.
class AmbientSpace {
public:
    /// Line tables are materialised up to this many points.
    static constexpr std::uint64_t kLineTableBudget = 4096;

    AmbientSpace(int n, gf::FieldPtr field);

    static std::shared_ptr<const AmbientSpace> create(int n, std::uint32_t q);
    static std::shared_ptr<const AmbientSpace> create(int n, gf::FieldPtr field);

    int n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return field_->q(); }
    std::uint32_t p() const noexcept { return field_->p(); }
    const gf::Field& field() const noexcept { return *field_; }
    const gf::FieldPtr& field_ptr() const noexcept { return field_; }
    std::uint32_t num_points() const noexcept { return num_points_; }
    std::size_t vector_dim() const noexcept { return static_cast<std::size_t>(n_) + 1; }

    std::span<const Elem> coords(std::uint32_t index) const {
        return {coords_.data() + std::size_t(index) * vector_dim(), vector_dim()};
    }
    ProjPoint point(std::uint32_t index) const;
    std::vector<ProjPoint> points() const;

    /// Scales v so its first nonzero entry is 1. Zero vector stays zero.
    Coords normalize(std::span<const Elem> v) const;
    /// Canonical index of the point spanned by v (any nonzero multiple).
    std::uint32_t index_of(std::span<const Elem> v) const;

    Elem dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept;

    Subspace span(std::span<const std::uint32_t> points) const;
    Subspace span(const PointSet& points) const;
    Subspace span_vectors(std::vector<Coords> rows) const;
    Subspace join(const Subspace& a, const Subspace& b) const;
    Subspace meet(const Subspace& a, const Subspace& b) const;
    Subspace full_space() const;
    Subspace empty_space() const { return Subspace(vector_dim(), {}); }
    /// {x : r . x = 0 for every row r}.
    Subspace annihilator(const std::vector<Coords>& rows) const;
    /// The hyperplane with the given normal vector.
    Subspace hyperplane(std::span<const Elem> normal) const;

    bool contains_vector(const Subspace& u, std::span<const Elem> v) const;
    bool incident(std::uint32_t point, const Subspace& u) const { return contains_vector(u, coords(point)); }

    std::vector<std::uint32_t> point_list(const Subspace& u) const;
    PointSet points_of(const Subspace& u) const;
    PointSet empty_set() const { return PointSet(num_points_); }

    /// Every k-space in canonical order: pivot-column set lexicographic, then
    /// free entries lexicographic. Throws DimensionOutOfRange.
    std::vector<Subspace> subspaces(int k) const;
    /// Streaming variant; stops early when the visitor returns false.
    void for_each_subspace(int k, const std::function<bool(const Subspace&)>& visit) const;
    /// k-spaces contained in u, ordered by their coordinates relative to u's basis.
    void for_each_subspace_within(const Subspace& u, int k, const std::function<bool(const Subspace&)>& visit) const;
    std::vector<Subspace> subspaces_within(const Subspace& u, int k) const;

    /// Hyperplanes avoiding S, as RREF subspaces, in order of their normal's point index.
    std::vector<Subspace> hyperplanes_disjoint_from(const PointSet& s) const;
    /// Normalised normals of the hyperplanes avoiding S.
    std::vector<Coords> disjoint_hyperplane_normals(const PointSet& s) const;

    bool has_line_table() const noexcept { return lines_ != nullptr; }
    /// Throws BudgetExceeded when the space is above kLineTableBudget.
    const LineTable& lines() const;
    /// Points of the line through two distinct points (works without the table).
    std::vector<std::uint32_t> line_points(std::uint32_t a, std::uint32_t b) const;

private:
    std::uint32_t index_of_normalized(std::span<const Elem> v) const noexcept;

    int n_;
    gf::FieldPtr field_;
    std::uint32_t num_points_;
    std::vector<Elem> coords_;
    std::vector<std::uint64_t> q_powers_;
    std::vector<std::uint64_t> theta_;  // theta_[j] = theta(j-1)
    std::shared_ptr<const LineTable> lines_;
};

using SpacePtr = std::shared_ptr<const AmbientSpace>;

/// RREF of rows over the field, zero rows dropped.
std::vector<Coords> row_reduce(const gf::Field& field, std::vector<Coords> rows);
/// Basis of {x in F_q^cols : r . x = 0 for every row r}, one vector per free column.
std::vector<Coords> null_space(const gf::Field& field, const std::vector<Coords>& rows, std::size_t cols);
/// Every rank x cols RREF matrix over F_q, pivot set lexicographic then free entries
/// lexicographic. Returns false if the visitor stopped early.
bool enumerate_rref(std::size_t cols, std::size_t rank, Elem q,
                    const std::function<bool(const std::vector<Coords>&)>& visit);

/// Uniformly random k-space (random spanning points, retried until independent).
Subspace random_subspace(const AmbientSpace& space, int k, std::mt19937_64& rng);
/// Random k-space with empty intersection with avoid.
Subspace random_skew_subspace(const AmbientSpace& space, int k, const Subspace& avoid, std::mt19937_64& rng);
/// Uniformly random invertible dim x dim matrix.
std::vector<Coords> random_invertible(const gf::Field& field, std::size_t dim, std::mt19937_64& rng);

}  // namespace pgcodes::geom
