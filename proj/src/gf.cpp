#include "pgcodes/gf.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace pgcodes {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrime: return "NonPrime";
        case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
        case ErrorKind::BadModulus: return "BadModulus";
        case ErrorKind::NoDefaultModulus: return "NoDefaultModulus";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotACodeword: return "NotACodeword";
        case ErrorKind::OddCharacteristic: return "OddCharacteristic";
        case ErrorKind::NotSkew: return "NotSkew";
        case ErrorKind::NotAHyperoval: return "NotAHyperoval";
        case ErrorKind::BadDimensions: return "BadDimensions";
        case ErrorKind::LineNotInPlane: return "LineNotInPlane";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::ClassificationOutOfBudget: return "ClassificationOutOfBudget";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace pgcodes

namespace pgcodes::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime: a^(p-2)
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

// remainder of a modulo a nonzero polynomial m over F_p
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::size_t shift = a.size() - m.size();
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - f) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // every monic divisor candidate of degree d in [1, deg/2]
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t h) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
        {{2, 1}, {1, 1}},          {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}}, {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},
        {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},
        {{7, 1}, {4, 1}},          {{11, 1}, {9, 1}},         {{13, 1}, {11, 1}},
        {{17, 1}, {14, 1}},        {{19, 1}, {17, 1}},        {{23, 1}, {18, 1}},
        {{29, 1}, {27, 1}},        {{31, 1}, {28, 1}},
    };
    auto it = table.find({p, h});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Field::Field(std::uint32_t p, std::uint32_t h, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), h_(h) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (h == 0) throw Error(ErrorKind::BadModulus, "exponent h must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < h; ++i) {
        q *= p;
        if (q > (1u << 16)) throw Error(ErrorKind::UnsupportedField, "q = p^h exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    auto conway = conway_polynomial(p, h);
    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != h + 1 || m.back() != 1 ||
            std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; }))
            throw Error(ErrorKind::BadModulus, "modulus must be monic of degree h with coefficients in [0,p)");
        if (!is_irreducible(p, m)) throw Error(ErrorKind::ReduciblePolynomial, "modulus is reducible over F_p");
        modulus_ = m;
        canonical_ = conway && *conway == m;
    } else {
        if (!conway)
            throw Error(ErrorKind::NoDefaultModulus,
                        "no built-in modulus for p=" + std::to_string(p) + ", h=" + std::to_string(h));
        modulus_ = *conway;
    }

    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        auto c = coefficients(a);
        for (auto& x : c) x = (p_ - x) % p_;
        neg_table_[a] = from_coefficients(c);
    }
    if (p_ != 2 && q_ <= 256) {
        add_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digitwise(a, b);
    }

    // locate a generator of the multiplicative group
    Elem gen = 0;
    for (Elem g = 1; g < q_ && gen == 0; ++g) {
        Elem x = g;
        std::uint32_t order = 1;
        while (x != 1) {
            x = poly_mul(x, g);
            ++order;
        }
        if (order == q_ - 1) gen = g;
    }
    exp_.resize(2 * std::size_t(q_));
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = poly_mul(x, gen);
    }
    for (std::size_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

Elem Field::add_digitwise(Elem a, Elem b) const noexcept {
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < h_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::poly_mul(Elem a, Elem b) const {
    auto ca = coefficients(a), cb = coefficients(b);
    Poly prod(2 * h_, 0);
    for (std::uint32_t i = 0; i < h_; ++i)
        for (std::uint32_t j = 0; j < h_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    Poly r = poly_rem(prod, modulus_, p_);
    r.resize(h_, 0);
    return from_coefficients(r);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

FieldElement Field::element(Elem index) const {
    if (index >= q_) throw Error(ErrorKind::FieldMismatch, "index " + std::to_string(index) + " out of range");
    return FieldElement(*this, index);
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
    std::vector<std::uint32_t> c(h_);
    for (std::uint32_t i = 0; i < h_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    Elem r = 0, scale = 1;
    for (std::size_t i = 0; i < coeffs.size() && i < h_; ++i) {
        r += (coeffs[i] % p_) * scale;
        scale *= p_;
    }
    return r;
}

std::vector<std::uint32_t> Field::subfield_orders() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 1; e <= h_; ++e) {
        if (h_ % e) continue;
        std::uint32_t s = 1;
        for (std::uint32_t i = 0; i < e; ++i) s *= p_;
        out.push_back(s);
    }
    return out;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement::FieldElement(const Field& field, Elem index) : field_(&field), index_(index) {}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_))
        throw Error(ErrorKind::FieldMismatch, field_->name() + " vs " + o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, field_->add(index_, o.index_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, field_->sub(index_, o.index_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, field_->mul(index_, o.index_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return FieldElement(*field_, field_->div(index_, o.index_));
}
FieldElement FieldElement::operator-() const { return FieldElement(*field_, field_->neg(index_)); }
FieldElement FieldElement::inverse() const { return FieldElement(*field_, field_->inv(index_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(*field_, field_->pow(index_, e)); }

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    return index_ == o.index_;
}

FieldPtr field_create(std::uint32_t p, std::uint32_t h, std::optional<std::vector<std::uint32_t>> modulus) {
    return std::make_shared<const Field>(p, h, std::move(modulus));
}

FieldPtr field_for_order(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p) continue;
        std::uint32_t h = 0, r = q;
        while (r % p == 0) {
            r /= p;
            ++h;
        }
        if (r != 1) break;
        if (!conway_polynomial(p, h))
            throw Error(ErrorKind::UnsupportedField, "q = " + std::to_string(q) + " not in the built-in table");
        return field_create(p, h);
    }
    throw Error(ErrorKind::UnsupportedField, "q = " + std::to_string(q) + " is not a prime power");
}

std::vector<FieldElement> enumerate_elements(const Field& field) {
    std::vector<FieldElement> out;
    out.reserve(field.q());
    for (Elem a = 0; a < field.q(); ++a) out.emplace_back(field, a);
    return out;
}

}  // namespace pgcodes::gf
