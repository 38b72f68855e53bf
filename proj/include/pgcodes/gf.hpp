#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgcodes::gf {

/// Raw element index in [0, q): the base-p encoding sum c_i p^i of the
/// residue sum c_i x^i modulo the field's defining polynomial.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// Monic irreducible test over F_p by trial division against every monic
/// polynomial of degree <= deg/2. Coefficients little-endian.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Conway polynomial for the built-in table (all q <= 32), little-endian.
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t h);

class Field;

/// An element bound to its field. Arithmetic between elements of different
/// fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(const Field& field, Elem index);

    Elem index() const noexcept { return index_; }
    const Field& field() const noexcept { return *field_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const;

private:
    void check_same(const FieldElement& o) const;

    const Field* field_;
    Elem index_;
};

/// GF(p^h) with dense integer indices and log/antilog tables.
/// Immutable after construction.
class Field {
public:
    Field(std::uint32_t p, std::uint32_t h, std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t h() const noexcept { return h_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// False when a user-supplied modulus differs from the built-in Conway polynomial.
    bool canonical() const noexcept { return canonical_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digitwise(a, b);
    }
    Elem neg(Elem a) const noexcept { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// A fixed primitive element (generator of the multiplicative group).
    Elem primitive() const noexcept { return exp_[1]; }

    FieldElement element(Elem index) const;
    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

    /// Subfield orders s = p^e with e | h, ascending.
    std::vector<std::uint32_t> subfield_orders() const;

    std::string name() const;

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && h_ == o.h_ && modulus_ == o.modulus_;
    }

private:
    Elem add_digitwise(Elem a, Elem b) const noexcept;
    Elem poly_mul(Elem a, Elem b) const;

    std::uint32_t p_;
    std::uint32_t h_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    bool canonical_ = true;
    std::vector<Elem> add_table_;
    std::vector<Elem> neg_table_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Validated field; throws NonPrime, ReduciblePolynomial, BadModulus or NoDefaultModulus.
FieldPtr field_create(std::uint32_t p, std::uint32_t h,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Field for q = p^h with the built-in modulus; throws UnsupportedField when q is not a
/// prime power covered by the table.
FieldPtr field_for_order(std::uint32_t q);

/// All q elements in ascending index order.
std::vector<FieldElement> enumerate_elements(const Field& field);

}  // namespace pgcodes::gf
