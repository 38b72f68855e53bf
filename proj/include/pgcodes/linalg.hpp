#pragma once

#include "pgcodes/pointset.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pgcodes::linalg {

using Row = std::vector<std::uint8_t>;

/// Reduced row-echelon basis over a prime field F_p, pivots recorded so a
/// membership query is a single reduce-and-compare pass.
struct Rref {
    std::uint32_t p = 2;
    std::size_t cols = 0;
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;
    /// Same rows bit-packed; populated only when p == 2.
    std::vector<PointSet> packed;

    std::size_t rank() const noexcept { return rows.size(); }
};

/// Gauss-Jordan elimination over F_p on byte rows.
Rref row_reduce(std::vector<Row> rows, std::size_t cols, std::uint32_t p);

/// Word-parallel XOR elimination over F_2.
Rref row_reduce_f2(std::vector<PointSet> rows, std::size_t cols);

/// v minus its projection onto the pivot columns; zero iff v is in the row space.
Row residual(const Rref& basis, std::span<const std::uint8_t> v);
bool in_row_space(const Rref& basis, std::span<const std::uint8_t> v);
bool in_row_space(const Rref& basis, const PointSet& v);

/// Basis of {x : r . x = 0 for all rows r} (one vector per free column).
std::vector<Row> null_space(const Rref& basis);

std::uint32_t dot(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, std::uint32_t p) noexcept;

}  // namespace pgcodes::linalg
