#include "pgcodes/projgeom.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <string>

namespace pgcodes::geom {

std::uint64_t theta(int n, std::uint64_t q) {
    if (n < 0) return 0;
    std::uint64_t sum = 0, pw = 1;
    for (int i = 0; i <= n; ++i) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

std::uint64_t gaussian_coefficient(int a, int b, std::uint64_t q) {
    if (b < 0 || b > a) return 0;
    auto qpow = [q](int e) {
        unsigned __int128 r = 1;
        for (int i = 0; i < e; ++i) r *= q;
        return r;
    };
    // [a choose j] = [a choose j-1] * (q^(a-j+1)-1)/(q^j-1); integral at every step
    unsigned __int128 g = 1;
    for (int j = 1; j <= b; ++j) {
        g = g * (qpow(a - j + 1) - 1) / (qpow(j) - 1);
        if (g > ~std::uint64_t{0}) throw Error(ErrorKind::BudgetExceeded, "Gaussian coefficient overflows 64 bits");
    }
    return static_cast<std::uint64_t>(g);
}

std::vector<Coords> row_reduce(const gf::Field& f, std::vector<Coords> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Elem inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Elem factor = f.neg(rows[i][c]);
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

AmbientSpace::AmbientSpace(int n, gf::FieldPtr field) : n_(n), field_(std::move(field)) {
    if (n < 0) throw Error(ErrorKind::DimensionOutOfRange, "ambient dimension must be >= 0");
    const std::uint64_t q = field_->q();
    const std::uint64_t count = geom::theta(n, q);
    if (count > (1u << 24)) throw Error(ErrorKind::BudgetExceeded, "PG(n,q) has too many points");
    num_points_ = static_cast<std::uint32_t>(count);

    q_powers_.resize(vector_dim() + 1);
    q_powers_[0] = 1;
    for (std::size_t i = 1; i < q_powers_.size(); ++i) q_powers_[i] = q_powers_[i - 1] * q;
    theta_.resize(vector_dim() + 1);
    for (std::size_t j = 0; j < theta_.size(); ++j) theta_[j] = geom::theta(static_cast<int>(j) - 1, q);

    // points in lexicographic order: leading position n first, then n-1, ...
    coords_.reserve(count * vector_dim());
    for (int lead = n; lead >= 0; --lead) {
        const std::size_t tail = static_cast<std::size_t>(n - lead);
        const std::uint64_t combos = q_powers_[tail];
        for (std::uint64_t code = 0; code < combos; ++code) {
            Coords v(vector_dim(), 0);
            v[lead] = 1;
            std::uint64_t c = code;
            for (int i = n; i > lead; --i) {
                v[i] = static_cast<Elem>(c % q);
                c /= q;
            }
            coords_.insert(coords_.end(), v.begin(), v.end());
        }
    }

    if (count <= kLineTableBudget && n >= 1) {
        auto table = std::make_shared<LineTable>();
        table->through.resize(num_points_);
        for_each_subspace(1, [&](const Subspace& line) {
            const auto id = static_cast<std::uint32_t>(table->points_on.size());
            auto pts = point_list(line);
            for (auto p : pts) table->through[p].push_back(id);
            table->sets.emplace_back(num_points_, pts);
            table->points_on.push_back(std::move(pts));
            return true;
        });
        lines_ = std::move(table);
    }
}

std::shared_ptr<const AmbientSpace> AmbientSpace::create(int n, std::uint32_t q) {
    return std::make_shared<const AmbientSpace>(n, gf::field_for_order(q));
}

std::shared_ptr<const AmbientSpace> AmbientSpace::create(int n, gf::FieldPtr field) {
    return std::make_shared<const AmbientSpace>(n, std::move(field));
}

ProjPoint AmbientSpace::point(std::uint32_t index) const {
    auto c = coords(index);
    return ProjPoint{Coords(c.begin(), c.end()), index};
}

std::vector<ProjPoint> AmbientSpace::points() const {
    std::vector<ProjPoint> out;
    out.reserve(num_points_);
    for (std::uint32_t i = 0; i < num_points_; ++i) out.push_back(point(i));
    return out;
}

Coords AmbientSpace::normalize(std::span<const Elem> v) const {
    Coords out(v.begin(), v.end());
    auto it = std::find_if(out.begin(), out.end(), [](Elem x) { return x != 0; });
    if (it == out.end() || *it == 1) return out;
    const Elem inv = field_->inv(*it);
    for (auto& x : out) x = field_->mul(x, inv);
    return out;
}

std::uint32_t AmbientSpace::index_of_normalized(std::span<const Elem> v) const noexcept {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    std::uint64_t idx = theta_[static_cast<std::size_t>(n_) - lead];
    std::uint64_t tail = 0;
    for (std::size_t i = lead + 1; i < v.size(); ++i) tail = tail * field_->q() + v[i];
    return static_cast<std::uint32_t>(idx + tail);
}

std::uint32_t AmbientSpace::index_of(std::span<const Elem> v) const {
    if (v.size() != vector_dim()) throw Error(ErrorKind::AmbientMismatch, "coordinate vector has wrong length");
    for (auto x : v)
        if (x >= q()) throw Error(ErrorKind::FieldMismatch, "coordinate out of field range");
    if (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }))
        throw Error(ErrorKind::AmbientMismatch, "zero vector is not a point");
    auto w = normalize(v);
    return index_of_normalized(w);
}

Elem AmbientSpace::dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = field_->add(s, field_->mul(a[i], b[i]));
    return s;
}

Subspace AmbientSpace::span_vectors(std::vector<Coords> rows) const {
    return Subspace(vector_dim(), row_reduce(*field_, std::move(rows)));
}

Subspace AmbientSpace::span(std::span<const std::uint32_t> points) const {
    std::vector<Coords> rows;
    rows.reserve(points.size());
    for (auto p : points) {
        auto c = coords(p);
        rows.emplace_back(c.begin(), c.end());
    }
    return span_vectors(std::move(rows));
}

Subspace AmbientSpace::span(const PointSet& points) const {
    // incremental so large sets only keep an independent prefix
    Subspace current = empty_space();
    points.for_each([&](std::uint32_t p) {
        if (current.rank() == vector_dim() || contains_vector(current, coords(p))) return;
        auto rows = current.basis();
        auto c = coords(p);
        rows.emplace_back(c.begin(), c.end());
        current = span_vectors(std::move(rows));
    });
    return current;
}

Subspace AmbientSpace::join(const Subspace& a, const Subspace& b) const {
    auto rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return span_vectors(std::move(rows));
}

std::vector<Coords> null_space(const gf::Field& f, const std::vector<Coords>& rows, std::size_t cols) {
    auto r = row_reduce(f, rows);
    std::vector<std::size_t> pivots;
    for (const auto& row : r)
        pivots.push_back(static_cast<std::size_t>(
            std::find_if(row.begin(), row.end(), [](Elem x) { return x != 0; }) - row.begin()));
    std::vector<Coords> kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        Coords v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = f.neg(r[i][free]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

Subspace AmbientSpace::annihilator(const std::vector<Coords>& rows) const {
    return span_vectors(null_space(*field_, rows, vector_dim()));
}

Subspace AmbientSpace::meet(const Subspace& a, const Subspace& b) const {
    auto na = annihilator(a.basis()).basis();
    auto nb = annihilator(b.basis()).basis();
    na.insert(na.end(), nb.begin(), nb.end());
    return annihilator(na);
}

Subspace AmbientSpace::full_space() const {
    std::vector<Coords> rows;
    for (std::size_t i = 0; i < vector_dim(); ++i) {
        Coords v(vector_dim(), 0);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return Subspace(vector_dim(), std::move(rows));
}

Subspace AmbientSpace::hyperplane(std::span<const Elem> normal) const {
    return annihilator({Coords(normal.begin(), normal.end())});
}

bool AmbientSpace::contains_vector(const Subspace& u, std::span<const Elem> v) const {
    Coords w(v.begin(), v.end());
    for (const auto& row : u.basis()) {
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        if (w[piv] == 0) continue;
        const Elem factor = field_->neg(w[piv]);
        for (std::size_t j = piv; j < w.size(); ++j) w[j] = field_->add(w[j], field_->mul(factor, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

std::vector<std::uint32_t> AmbientSpace::point_list(const Subspace& u) const {
    std::vector<std::uint32_t> out;
    const auto& rows = u.basis();
    const std::size_t r = rows.size();
    const Elem qq = q();
    Coords coef(r, 0), v(vector_dim());
    for (std::size_t lead = 0; lead < r; ++lead) {
        // coefficient vectors whose first nonzero entry is a 1 at position lead
        const std::size_t tail = r - lead - 1;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < tail; ++i) combos *= qq;
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::fill(coef.begin(), coef.end(), 0);
            coef[lead] = 1;
            std::uint64_t c = code;
            for (std::size_t i = r; i-- > lead + 1;) {
                coef[i] = static_cast<Elem>(c % qq);
                c /= qq;
            }
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t i = lead; i < r; ++i) {
                if (coef[i] == 0) continue;
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = field_->add(v[j], field_->mul(coef[i], rows[i][j]));
            }
            out.push_back(index_of_normalized(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet AmbientSpace::points_of(const Subspace& u) const {
    auto pts = point_list(u);
    return PointSet(num_points_, pts);
}

bool enumerate_rref(std::size_t cols, std::size_t rank, Elem q,
                    const std::function<bool(const std::vector<Coords>&)>& visit) {
    if (rank == 0) return visit({});
    std::vector<std::size_t> piv(rank);
    for (std::size_t i = 0; i < rank; ++i) piv[i] = i;
    while (true) {
        // free positions: (row, col) with col right of the row's pivot and not a pivot column
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t c = piv[i] + 1; c < cols; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
        std::vector<Coords> m(rank, Coords(cols, 0));
        for (std::size_t i = 0; i < rank; ++i) m[i][piv[i]] = 1;
        std::vector<Elem> vals(free.size(), 0);
        bool more = true;
        while (more) {
            for (std::size_t t = 0; t < free.size(); ++t) m[free[t].first][free[t].second] = vals[t];
            if (!visit(m)) return false;
            more = false;
            for (std::size_t t = free.size(); t-- > 0;) {
                if (++vals[t] < q) {
                    more = true;
                    break;
                }
                vals[t] = 0;
            }
        }
        // next pivot combination in lexicographic order
        std::size_t i = rank;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (piv[i] < cols - rank + i) {
                ++piv[i];
                for (std::size_t j = i + 1; j < rank; ++j) piv[j] = piv[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return true;
    }
}

void AmbientSpace::for_each_subspace(int k, const std::function<bool(const Subspace&)>& visit) const {
    if (k < -1 || k > n_) throw Error(ErrorKind::DimensionOutOfRange, "k = " + std::to_string(k));
    const std::size_t cols = vector_dim();
    enumerate_rref(cols, static_cast<std::size_t>(k + 1), q(),
                   [&](const std::vector<Coords>& m) { return visit(Subspace(cols, m)); });
}

void AmbientSpace::for_each_subspace_within(const Subspace& u, int k,
                                            const std::function<bool(const Subspace&)>& visit) const {
    if (k < -1 || k > u.dim()) throw Error(ErrorKind::DimensionOutOfRange, "k = " + std::to_string(k));
    const auto& basis = u.basis();
    enumerate_rref(u.rank(), static_cast<std::size_t>(k + 1), q(), [&](const std::vector<Coords>& local) {
        std::vector<Coords> rows;
        rows.reserve(local.size());
        for (const auto& coeff : local) {
            Coords v(vector_dim(), 0);
            for (std::size_t i = 0; i < coeff.size(); ++i) {
                if (coeff[i] == 0) continue;
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = field_->add(v[j], field_->mul(coeff[i], basis[i][j]));
            }
            rows.push_back(std::move(v));
        }
        return visit(span_vectors(std::move(rows)));
    });
}

std::vector<Subspace> AmbientSpace::subspaces_within(const Subspace& u, int k) const {
    std::vector<Subspace> out;
    for_each_subspace_within(u, k, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Subspace> AmbientSpace::subspaces(int k) const {
    if (k < 0 || k > n_) throw Error(ErrorKind::DimensionOutOfRange, "k = " + std::to_string(k));
    std::vector<Subspace> out;
    out.reserve(gaussian_coefficient(n_ + 1, k + 1, q()));
    for_each_subspace(k, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Coords> AmbientSpace::disjoint_hyperplane_normals(const PointSet& s) const {
    const auto members = s.members();
    std::vector<Coords> out;
    for (std::uint32_t a = 0; a < num_points_; ++a) {
        auto normal = coords(a);
        bool disjoint = true;
        for (auto p : members) {
            if (dot(normal, coords(p)) == 0) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) out.emplace_back(normal.begin(), normal.end());
    }
    return out;
}

std::vector<Subspace> AmbientSpace::hyperplanes_disjoint_from(const PointSet& s) const {
    std::vector<Subspace> out;
    for (const auto& normal : disjoint_hyperplane_normals(s)) out.push_back(hyperplane(normal));
    return out;
}

const LineTable& AmbientSpace::lines() const {
    if (!lines_) throw Error(ErrorKind::BudgetExceeded, "line table not materialised for this space");
    return *lines_;
}

std::vector<std::uint32_t> AmbientSpace::line_points(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t pts[2] = {a, b};
    return point_list(span(pts));
}

Subspace random_subspace(const AmbientSpace& space, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, space.num_points() - 1);
    while (true) {
        std::vector<std::uint32_t> pts(static_cast<std::size_t>(k) + 1);
        for (auto& p : pts) p = pick(rng);
        auto s = space.span(pts);
        if (s.dim() == k) return s;
    }
}

Subspace random_skew_subspace(const AmbientSpace& space, int k, const Subspace& avoid, std::mt19937_64& rng) {
    if (static_cast<int>(avoid.rank()) + k + 1 > static_cast<int>(space.vector_dim()))
        throw Error(ErrorKind::BadDimensions, "no skew subspace of that dimension exists");
    while (true) {
        auto s = random_subspace(space, k, rng);
        if (space.join(s, avoid).rank() == s.rank() + avoid.rank()) return s;
    }
}

std::vector<Coords> random_invertible(const gf::Field& field, std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> pick(0, field.q() - 1);
    while (true) {
        std::vector<Coords> m(dim, Coords(dim));
        for (auto& row : m)
            for (auto& x : row) x = pick(rng);
        if (row_reduce(field, m).size() == dim) return m;
    }
}

}  // namespace pgcodes::geom
