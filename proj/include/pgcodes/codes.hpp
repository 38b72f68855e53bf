#pragma once

#include "pgcodes/linalg.hpp"
#include "pgcodes/pointset.hpp"
#include "pgcodes/projgeom.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pgcodes::codes {

/// A function from the points of the ambient space to F_p.
class CodeVector {
public:
    CodeVector(geom::SpacePtr ambient, std::vector<std::uint8_t> values);

    static CodeVector zero(geom::SpacePtr ambient);
    static CodeVector all_one(geom::SpacePtr ambient);
    static CodeVector characteristic(geom::SpacePtr ambient, const PointSet& set, std::uint8_t alpha = 1);

    const geom::AmbientSpace& ambient() const noexcept { return *ambient_; }
    const geom::SpacePtr& ambient_ptr() const noexcept { return ambient_; }
    std::uint32_t p() const noexcept { return ambient_->p(); }
    std::size_t length() const noexcept { return values_.size(); }
    std::span<const std::uint8_t> values() const noexcept { return values_; }
    std::uint8_t operator[](std::size_t i) const { return values_[i]; }

    std::size_t weight() const noexcept;
    PointSet support() const;

    CodeVector operator+(const CodeVector& o) const;
    CodeVector operator-(const CodeVector& o) const;
    CodeVector operator-() const;
    CodeVector scaled(std::uint8_t alpha) const;

    bool operator==(const CodeVector& o) const { return values_ == o.values_; }

private:
    void check_same(const CodeVector& o) const;

    geom::SpacePtr ambient_;
    std::vector<std::uint8_t> values_;
};

/// c . chi_B in F_p.
std::uint32_t dot(const CodeVector& c, const PointSet& block);

/// Exact rational with positive denominator in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d = 1);
    Rational operator+(const Rational& o) const { return of(num * o.den + o.num * den, den * o.den); }
    Rational operator-(const Rational& o) const { return of(num * o.den - o.num * den, den * o.den); }
    Rational operator*(const Rational& o) const { return of(num * o.num, den * o.den); }
    Rational operator/(const Rational& o) const { return of(num * o.den, den * o.num); }
    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
    std::string str() const;
};

/// lambda: max blocks through a point pair; n_blocks: (min blocks through a point) - lambda.
struct BoundParams {
    std::uint64_t lambda = 1;
    std::uint64_t n_blocks = 0;
    std::uint32_t p = 2;
};

/// The code of points and k-spaces of PG(n,q) over F_p.
class IncidenceCode {
public:
    /// Throws BudgetExceeded above AmbientSpace::kLineTableBudget points,
    /// DimensionOutOfRange unless 1 <= k <= n-1.
    static IncidenceCode build(geom::SpacePtr space, int k);

    const geom::AmbientSpace& ambient() const noexcept { return *space_; }
    const geom::SpacePtr& ambient_ptr() const noexcept { return space_; }
    int n() const noexcept { return space_->n(); }
    int k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return space_->q(); }
    std::uint32_t p() const noexcept { return space_->p(); }
    std::size_t length() const noexcept { return space_->num_points(); }

    /// The k-spaces, in canonical order; their characteristic vectors generate the code.
    const std::vector<PointSet>& blocks() const noexcept { return blocks_; }
    const linalg::Rref& basis() const noexcept { return basis_; }
    const std::vector<linalg::Row>& dual_basis() const noexcept { return dual_basis_; }

    std::size_t dimension() const noexcept { return basis_.rank(); }
    std::size_t dual_dimension() const noexcept { return dual_basis_.size(); }

    bool contains(const CodeVector& c) const;
    bool dual_contains(const CodeVector& c) const;

    /// Pair/point replication numbers read off the blocks.
    BoundParams bound_params() const;

private:
    IncidenceCode(geom::SpacePtr space, int k) : space_(std::move(space)), k_(k) {}
    void check_ambient(const CodeVector& c) const;

    geom::SpacePtr space_;
    int k_;
    std::vector<PointSet> blocks_;
    linalg::Rref basis_;
    std::vector<linalg::Row> dual_basis_;
};

/// 2((n+lambda)/lambda - n/(lambda p)).
Rational design_dual_bound(const BoundParams& bp);
/// The same bound specialised to C_1(n,q): 2(theta_{n-1}(1-1/p) + 1/p).
Rational line_code_dual_bound(int n, std::uint32_t q);

/// Sum over points of the integer representative in [0,p) of c(P).
std::uint64_t multiset_size(const CodeVector& c);

/// True when c takes only values {0, a, -a} for one a, with equally many a and -a entries.
bool has_two_valued_shape(const CodeVector& c);

/// The constant c . chi_rho of a codeword of the hyperplane code. Throws
/// NotACodeword when c is not in hyperplane_code.
std::uint32_t beta_of(const IncidenceCode& hyperplane_code, const CodeVector& c);

/// Points R of S with span{P,R} meeting S \ {P} only in R.
PointSet feet(const geom::AmbientSpace& space, const PointSet& s, std::uint32_t point);

/// span(supp(c)) has projective dimension exactly expected_dim.
bool support_subspace_check(const CodeVector& c, int expected_dim);

/// Largest message space accepted by the traversals below.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

/// All codewords with 0 < wt <= wmax by traversal of the full message space,
/// ordered by message index. Throws BudgetExceeded when p^dim > 2^24.
std::vector<CodeVector> enumerate_codewords_up_to_weight(const IncidenceCode& code, std::size_t wmax,
                                                         unsigned threads = 1);

/// Span of an arbitrary basis, filtered by weight; same ordering and budget rules.
std::vector<CodeVector> enumerate_span_up_to_weight(const geom::SpacePtr& space, const std::vector<linalg::Row>& basis,
                                                    std::size_t wmax, unsigned threads = 1);

struct MinWeightWords {
    std::size_t weight = 0;  // 0 when the span is {0}
    std::vector<CodeVector> words;
    std::uint64_t visited = 0;
};

/// Minimum nonzero weight of the span and every word attaining it.
MinWeightWords enumerate_span_min_weight(const geom::SpacePtr& space, const std::vector<linalg::Row>& basis,
                                         unsigned threads = 1);

}  // namespace pgcodes::codes
