#pragma once

#include "pgcodes/codes.hpp"
#include "pgcodes/pointset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pgcodes::classify {

struct ClassificationReport {
    std::string kind;
    std::map<std::string, std::int64_t> params;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    /// Sorted; present only when certificates were requested.
    std::optional<std::vector<PointSet>> certificates;
    std::map<std::string, std::uint64_t> tallies;
    std::vector<std::string> violations;
    double wall_time = 0.0;

    bool ok() const noexcept { return violations.empty(); }
};

/// All hyperovals of PG(2,q), q in {2,4,8}, by arc DFS in increasing point order.
/// Each result is re-checked (no three collinear, every line 0- or 2-secant).
ClassificationReport enumerate_hyperovals(std::uint32_t q, unsigned threads = 1, bool certify = false);

/// q^5 - q^2.
std::uint64_t count_conics(std::uint64_t q);

/// Number of hyperovals of PG(2,q): 168 for q = 4, 32704 for q = 8. Throws UnsupportedField.
std::uint64_t delta(std::uint32_t q);

/// Even sets of minimum size in PG(n,q), q even, via the dual of C_1(n,q).
/// Throws ClassificationOutOfBudget for PG(3,8), BudgetExceeded when the dual
/// is too large to traverse, OddCharacteristic for odd q.
ClassificationReport enumerate_min_even_sets(int n, std::uint32_t q, unsigned threads = 1, bool certify = false);

/// [n+1, k-1]_q [n-k+2, 3]_q delta(q). q in {4, 8}.
std::uint64_t count_min_weight_codewords(int n, int k, std::uint32_t q);

/// Traverses C_{n-1}(n,q) and sorts every nonzero word of weight <= 2q^(n-1) into
/// a*chi_pi or a*(chi_pi - chi_rho); anything else is a violation. For q = 2 every
/// codeword is also checked against {0, 1, chi_pi, chi_pi - chi_rho}.
ClassificationReport verify_small_weight_theorem(int n, std::uint32_t q, unsigned threads = 1);

struct BoundReport {
    int n = 0;
    std::uint32_t q = 0;
    std::size_t min_weight = 0;
    std::uint64_t min_words = 0;
    codes::Rational bound;          // from the code's block parameters
    codes::Rational closed_form;    // 2(theta_{n-1}(1-1/p) + 1/p)
    std::optional<std::uint64_t> expected;  // (q+2)q^(n-2) for q even
    std::uint64_t nodes = 0;
    double wall_time = 0.0;

    bool ok() const;
};

/// Minimum weight of C_1(n,q)^perp by full traversal, against the lower bound.
BoundReport verify_bound_attainment(int n, std::uint32_t q, unsigned threads = 1);

}  // namespace pgcodes::classify
