#include "pgcodes/codes.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

namespace pgcodes::codes {

CodeVector::CodeVector(geom::SpacePtr ambient, std::vector<std::uint8_t> values)
    : ambient_(std::move(ambient)), values_(std::move(values)) {
    if (values_.size() != ambient_->num_points())
        throw Error(ErrorKind::AmbientMismatch, "code vector length differs from the number of points");
    const auto p = ambient_->p();
    for (auto v : values_)
        if (v >= p) throw Error(ErrorKind::FieldMismatch, "code vector entry outside [0,p)");
}

CodeVector CodeVector::zero(geom::SpacePtr ambient) {
    const auto n = ambient->num_points();
    return CodeVector(std::move(ambient), std::vector<std::uint8_t>(n, 0));
}

CodeVector CodeVector::all_one(geom::SpacePtr ambient) {
    const auto n = ambient->num_points();
    return CodeVector(std::move(ambient), std::vector<std::uint8_t>(n, 1));
}

CodeVector CodeVector::characteristic(geom::SpacePtr ambient, const PointSet& set, std::uint8_t alpha) {
    std::vector<std::uint8_t> v(ambient->num_points(), 0);
    set.for_each([&](std::uint32_t i) { v[i] = alpha; });
    return CodeVector(std::move(ambient), std::move(v));
}

std::size_t CodeVector::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(), [](std::uint8_t x) { return x; }));
}

PointSet CodeVector::support() const {
    PointSet s(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i]) s.insert(static_cast<std::uint32_t>(i));
    return s;
}

void CodeVector::check_same(const CodeVector& o) const {
    if (ambient_ != o.ambient_ &&
        (ambient_->n() != o.ambient_->n() || !(ambient_->field() == o.ambient_->field())))
        throw Error(ErrorKind::AmbientMismatch, "code vectors over different ambient spaces");
}

CodeVector CodeVector::operator+(const CodeVector& o) const {
    check_same(o);
    auto v = values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint8_t>((v[i] + o.values_[i]) % p());
    return CodeVector(ambient_, std::move(v));
}

CodeVector CodeVector::operator-() const {
    auto v = values_;
    for (auto& x : v) x = static_cast<std::uint8_t>((p() - x) % p());
    return CodeVector(ambient_, std::move(v));
}

CodeVector CodeVector::operator-(const CodeVector& o) const { return *this + (-o); }

CodeVector CodeVector::scaled(std::uint8_t alpha) const {
    auto v = values_;
    for (auto& x : v) x = static_cast<std::uint8_t>(std::uint32_t(x) * alpha % p());
    return CodeVector(ambient_, std::move(v));
}

std::uint32_t dot(const CodeVector& c, const PointSet& block) {
    std::uint64_t s = 0;
    block.for_each([&](std::uint32_t i) { s += c[i]; });
    return static_cast<std::uint32_t>(s % c.p());
}

Rational Rational::of(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorKind::BadDimensions, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const auto g = std::gcd(n < 0 ? -n : n, d);
    return Rational{n / (g ? g : 1), d / (g ? g : 1)};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

IncidenceCode IncidenceCode::build(geom::SpacePtr space, int k) {
    if (k < 1 || k > space->n() - 1)
        throw Error(ErrorKind::DimensionOutOfRange, "need 1 <= k <= n-1, got k = " + std::to_string(k));
    if (space->num_points() > geom::AmbientSpace::kLineTableBudget)
        throw Error(ErrorKind::BudgetExceeded, "theta_n = " + std::to_string(space->num_points()) +
                                                   " exceeds the linear-algebra budget of 4096 points");
    IncidenceCode code(space, k);
    if (k == 1) {
        code.blocks_ = space->lines().sets;
    } else {
        space->for_each_subspace(k, [&](const geom::Subspace& u) {
            code.blocks_.push_back(space->points_of(u));
            return true;
        });
    }
    const std::size_t cols = space->num_points();
    if (space->p() == 2) {
        code.basis_ = linalg::row_reduce_f2(code.blocks_, cols);
    } else {
        std::vector<linalg::Row> rows;
        rows.reserve(code.blocks_.size());
        for (const auto& b : code.blocks_) {
            linalg::Row r(cols, 0);
            b.for_each([&](std::uint32_t i) { r[i] = 1; });
            rows.push_back(std::move(r));
        }
        code.basis_ = linalg::row_reduce(std::move(rows), cols, space->p());
    }
    code.dual_basis_ = linalg::null_space(code.basis_);
    return code;
}

void IncidenceCode::check_ambient(const CodeVector& c) const {
    if (c.length() != length() || c.p() != p())
        throw Error(ErrorKind::AmbientMismatch, "code vector does not live on this code's point set");
}

bool IncidenceCode::contains(const CodeVector& c) const {
    check_ambient(c);
    return linalg::in_row_space(basis_, c.values());
}

bool IncidenceCode::dual_contains(const CodeVector& c) const {
    check_ambient(c);
    return std::all_of(blocks_.begin(), blocks_.end(), [&](const PointSet& b) { return dot(c, b) == 0; });
}

BoundParams IncidenceCode::bound_params() const {
    // k-spaces through a point pair: [n-1 choose k-1]_q; through a point: [n choose k]_q
    const auto lambda = geom::gaussian_coefficient(n() - 1, k() - 1, q());
    const auto per_point = geom::gaussian_coefficient(n(), k(), q());
    return BoundParams{lambda, per_point - lambda, p()};
}

Rational design_dual_bound(const BoundParams& bp) {
    const auto lam = static_cast<std::int64_t>(bp.lambda);
    const auto nb = static_cast<std::int64_t>(bp.n_blocks);
    const auto p = static_cast<std::int64_t>(bp.p);
    return Rational::of(2) * (Rational::of(nb + lam, lam) - Rational::of(nb, lam * p));
}

Rational line_code_dual_bound(int n, std::uint32_t q) {
    const auto field = gf::field_for_order(q);
    const auto p = static_cast<std::int64_t>(field->p());
    const auto t = static_cast<std::int64_t>(geom::theta(n - 1, q));
    return Rational::of(2) * (Rational::of(t) * (Rational::of(1) - Rational::of(1, p)) + Rational::of(1, p));
}

std::uint64_t multiset_size(const CodeVector& c) {
    std::uint64_t s = 0;
    for (auto v : c.values()) s += v;
    return s;
}

bool has_two_valued_shape(const CodeVector& c) {
    const std::uint32_t p = c.p();
    std::vector<std::size_t> count(p, 0);
    for (auto v : c.values()) ++count[v];
    std::uint32_t alpha = 0;
    for (std::uint32_t a = 1; a < p && alpha == 0; ++a)
        if (count[a]) alpha = a;
    if (alpha == 0) return true;
    for (std::uint32_t a = 1; a < p; ++a)
        if (count[a] && a != alpha && a != p - alpha) return false;
    return count[alpha] == count[p - alpha];
}

std::uint32_t beta_of(const IncidenceCode& hyperplane_code, const CodeVector& c) {
    if (hyperplane_code.k() != hyperplane_code.n() - 1)
        throw Error(ErrorKind::DimensionOutOfRange, "beta is defined for the code of hyperplanes");
    if (!hyperplane_code.contains(c)) throw Error(ErrorKind::NotACodeword, "vector is not in the hyperplane code");
    const auto& space = hyperplane_code.ambient();
    const std::uint32_t beta = dot(c, space.lines().sets.front());
#ifndef NDEBUG
    for (int d = 1; d <= space.n(); ++d) {
        int seen = 0;
        space.for_each_subspace(d, [&](const geom::Subspace& u) {
            if (dot(c, space.points_of(u)) != beta) throw Error(ErrorKind::NotACodeword, "inner product not constant");
            return ++seen < 8;
        });
    }
#endif
    return beta;
}

PointSet feet(const geom::AmbientSpace& space, const PointSet& s, std::uint32_t point) {
    PointSet out(space.num_points());
    if (space.has_line_table()) {
        const auto& lines = space.lines();
        for (auto id : lines.through[point]) {
            PointSet rest = lines.sets[id] & s;
            rest.erase(point);
            if (rest.size() == 1) out |= rest;
        }
        return out;
    }
    PointSet seen(space.num_points());
    s.for_each([&](std::uint32_t r) {
        if (r == point || seen.contains(r)) return;
        PointSet rest(space.num_points(), space.line_points(point, r));
        rest &= s;
        rest.erase(point);
        seen |= rest;
        if (rest.size() == 1) out.insert(r);
    });
    return out;
}

bool support_subspace_check(const CodeVector& c, int expected_dim) {
    return c.ambient().span(c.support()).dim() == expected_dim;
}

namespace {

std::uint64_t message_count(std::uint32_t p, std::size_t rank) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        total *= p;
        if (total > kEnumerationBudget)
            throw Error(ErrorKind::BudgetExceeded, "p^dim = " + std::to_string(p) + "^" + std::to_string(rank) +
                                                       " exceeds the enumeration budget 2^24");
    }
    return total;
}

struct SpanData {
    std::uint32_t p;
    std::size_t cols;
    const std::vector<linalg::Row>* rows;
    std::vector<PointSet> packed;
};

// Visits messages [begin, end) in order; visit(weight, materialise) where
// materialise() yields the codeword bytes.
template <typename Visit>
void run_chunk(const SpanData& sp, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    const std::size_t r = sp.rows->size();
    if (begin >= end) return;
    if (sp.p == 2) {
        PointSet cur(sp.cols);
        for (std::size_t i = 0; i < r; ++i)
            if ((begin >> i) & 1) cur ^= sp.packed[i];
        for (std::uint64_t m = begin;;) {
            visit(cur.size(), [&] {
                std::vector<std::uint8_t> v(sp.cols, 0);
                cur.for_each([&](std::uint32_t j) { v[j] = 1; });
                return v;
            });
            if (++m >= end) break;
            const int t = std::countr_zero(m);
            for (int i = 0; i <= t; ++i) cur ^= sp.packed[static_cast<std::size_t>(i)];
        }
        return;
    }
    const std::uint32_t p = sp.p;
    std::vector<std::uint32_t> digits(r, 0);
    std::vector<std::uint8_t> cur(sp.cols, 0);
    auto add_row = [&](std::size_t i) {
        const auto& row = (*sp.rows)[i];
        for (std::size_t j = 0; j < sp.cols; ++j) {
            const std::uint32_t s = cur[j] + row[j];
            cur[j] = static_cast<std::uint8_t>(s >= p ? s - p : s);
        }
    };
    std::uint64_t m0 = begin;
    for (std::size_t i = 0; i < r; ++i) {
        digits[i] = static_cast<std::uint32_t>(m0 % p);
        m0 /= p;
        for (std::uint32_t t = 0; t < digits[i]; ++t) add_row(i);
    }
    for (std::uint64_t m = begin;;) {
        const auto w = static_cast<std::size_t>(std::count_if(cur.begin(), cur.end(), [](std::uint8_t x) { return x; }));
        visit(w, [&] { return cur; });
        if (++m >= end) break;
        for (std::size_t i = 0; i < r; ++i) {
            add_row(i);
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
}

SpanData make_span(const geom::SpacePtr& space, const std::vector<linalg::Row>& basis) {
    SpanData sp{space->p(), space->num_points(), &basis, {}};
    if (sp.p == 2) {
        for (const auto& row : basis) {
            PointSet s(sp.cols);
            for (std::size_t j = 0; j < sp.cols; ++j)
                if (row[j]) s.insert(static_cast<std::uint32_t>(j));
            sp.packed.push_back(std::move(s));
        }
    }
    return sp;
}

// Splits [0,total) into contiguous ranges, runs work(chunk, begin, end) on a
// pool of threads; chunk results stay indexed by range so merges are ordered.
template <typename Work>
void parallel_ranges(std::uint64_t total, unsigned threads, std::size_t chunks, Work&& work) {
    threads = std::max(1u, threads);
    std::vector<std::uint64_t> bounds(chunks + 1);
    for (std::size_t c = 0; c <= chunks; ++c) bounds[c] = total * c / chunks;
    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) work(c, bounds[c], bounds[c + 1]);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t c; (c = next.fetch_add(1)) < chunks;) work(c, bounds[c], bounds[c + 1]);
        });
    }
    for (auto& th : pool) th.join();
}

std::size_t chunk_count(std::uint64_t total, unsigned threads) {
    if (threads <= 1) return 1;
    return static_cast<std::size_t>(std::min<std::uint64_t>(total, std::uint64_t{threads} * 8));
}

}  // namespace

std::vector<CodeVector> enumerate_span_up_to_weight(const geom::SpacePtr& space, const std::vector<linalg::Row>& basis,
                                                    std::size_t wmax, unsigned threads) {
    if (wmax == 0) return {};
    const auto total = message_count(space->p(), basis.size());
    const auto sp = make_span(space, basis);
    const auto chunks = chunk_count(total, threads);
    std::vector<std::vector<std::vector<std::uint8_t>>> found(chunks);
    parallel_ranges(total, threads, chunks, [&](std::size_t c, std::uint64_t b, std::uint64_t e) {
        run_chunk(sp, b, e, [&](std::size_t w, auto&& materialise) {
            if (w > 0 && w <= wmax) found[c].push_back(materialise());
        });
    });
    std::vector<CodeVector> out;
    for (auto& chunk : found)
        for (auto& v : chunk) out.emplace_back(space, std::move(v));
    return out;
}

std::vector<CodeVector> enumerate_codewords_up_to_weight(const IncidenceCode& code, std::size_t wmax,
                                                         unsigned threads) {
    return enumerate_span_up_to_weight(code.ambient_ptr(), code.basis().rows, wmax, threads);
}

MinWeightWords enumerate_span_min_weight(const geom::SpacePtr& space, const std::vector<linalg::Row>& basis,
                                         unsigned threads) {
    const auto total = message_count(space->p(), basis.size());
    const auto sp = make_span(space, basis);
    const auto chunks = chunk_count(total, threads);
    struct Best {
        std::size_t weight = ~std::size_t{0};
        std::vector<std::vector<std::uint8_t>> words;
    };
    std::vector<Best> best(chunks);
    parallel_ranges(total, threads, chunks, [&](std::size_t c, std::uint64_t b, std::uint64_t e) {
        auto& mine = best[c];
        run_chunk(sp, b, e, [&](std::size_t w, auto&& materialise) {
            if (w == 0 || w > mine.weight) return;
            if (w < mine.weight) {
                mine.weight = w;
                mine.words.clear();
            }
            mine.words.push_back(materialise());
        });
    });
    MinWeightWords out;
    out.visited = total;
    std::size_t min_w = ~std::size_t{0};
    for (const auto& b : best) min_w = std::min(min_w, b.weight);
    if (min_w == ~std::size_t{0}) return out;
    out.weight = min_w;
    for (auto& b : best)
        if (b.weight == min_w)
            for (auto& v : b.words) out.words.emplace_back(space, std::move(v));
    return out;
}

}  // namespace pgcodes::codes
