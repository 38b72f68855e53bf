#include "pgcodes/linalg.hpp"

#include <algorithm>
#include <bit>

namespace pgcodes::linalg {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Rref row_reduce(std::vector<Row> rows, std::size_t cols, std::uint32_t p) {
    if (p == 2) {
        std::vector<PointSet> packed;
        packed.reserve(rows.size());
        for (const auto& r : rows) {
            PointSet s(cols);
            for (std::size_t j = 0; j < cols; ++j)
                if (r[j] & 1) s.insert(static_cast<std::uint32_t>(j));
            packed.push_back(std::move(s));
        }
        return row_reduce_f2(std::move(packed), cols);
    }
    Rref out;
    out.p = p;
    out.cols = cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint32_t inv = inv_mod(rows[r][c], p);
        for (auto& x : rows[r]) x = static_cast<std::uint8_t>(x * inv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::uint32_t f = rows[i][c] % p;
            if (i == r || f == 0) continue;
            const std::uint32_t neg = p - f;
            auto& dst = rows[i];
            const auto& src = rows[r];
            for (std::size_t j = c; j < cols; ++j) dst[j] = static_cast<std::uint8_t>((dst[j] + neg * src[j]) % p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

Rref row_reduce_f2(std::vector<PointSet> rows, std::size_t cols) {
    Rref out;
    out.p = 2;
    out.cols = cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        const auto col = static_cast<std::uint32_t>(c);
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].contains(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::size_t word = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        const auto src = rows[r].words();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            auto dst = rows[i].words();
            if (!(dst[word] & bit)) continue;
            // columns left of c are already clear in the pivot row
            for (std::size_t w = word; w < dst.size(); ++w) dst[w] ^= src[w];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows.reserve(r);
    for (const auto& s : rows) {
        Row row(cols, 0);
        s.for_each([&](std::uint32_t j) { row[j] = 1; });
        out.rows.push_back(std::move(row));
    }
    out.packed = std::move(rows);
    return out;
}

Row residual(const Rref& basis, std::span<const std::uint8_t> v) {
    const std::uint32_t p = basis.p;
    Row w(v.begin(), v.end());
    for (auto& x : w) x = static_cast<std::uint8_t>(x % p);
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        const std::size_t c = basis.pivots[i];
        const std::uint32_t f = w[c];
        if (f == 0) continue;
        const std::uint32_t neg = p - f;
        const auto& row = basis.rows[i];
        for (std::size_t j = c; j < w.size(); ++j) w[j] = static_cast<std::uint8_t>((w[j] + neg * row[j]) % p);
    }
    return w;
}

bool in_row_space(const Rref& basis, std::span<const std::uint8_t> v) {
    if (basis.p == 2 && basis.packed.size() == basis.rows.size()) {
        PointSet s(basis.cols);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] & 1) s.insert(static_cast<std::uint32_t>(j));
        return in_row_space(basis, s);
    }
    auto w = residual(basis, v);
    return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

bool in_row_space(const Rref& basis, const PointSet& v) {
    PointSet w = v;
    for (std::size_t i = 0; i < basis.packed.size(); ++i)
        if (w.contains(static_cast<std::uint32_t>(basis.pivots[i]))) w ^= basis.packed[i];
    return w.empty();
}

std::vector<Row> null_space(const Rref& basis) {
    const std::uint32_t p = basis.p;
    std::vector<bool> is_pivot(basis.cols, false);
    for (auto c : basis.pivots) is_pivot[c] = true;
    std::vector<Row> out;
    for (std::size_t f = 0; f < basis.cols; ++f) {
        if (is_pivot[f]) continue;
        Row v(basis.cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < basis.rows.size(); ++i)
            v[basis.pivots[i]] = static_cast<std::uint8_t>((p - basis.rows[i][f]) % p);
        out.push_back(std::move(v));
    }
    return out;
}

std::uint32_t dot(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::uint32_t p) noexcept {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::uint64_t(a[i]) * b[i];
    return static_cast<std::uint32_t>(s % p);
}

}  // namespace pgcodes::linalg
