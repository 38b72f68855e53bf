#include "pgcodes/classify.hpp"

#include "pgcodes/error.hpp"
#include "pgcodes/evensets.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>
#include <unordered_set>

namespace pgcodes::classify {

using geom::AmbientSpace;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs task(i) for i in [0, n) on up to `threads` workers.
template <typename Task>
void run_tasks(std::size_t n, unsigned threads, Task&& task) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) task(i);
        });
    for (auto& th : pool) th.join();
}

// Points of PG(2,8) fit in two words.
using Mask = std::array<std::uint64_t, 2>;

struct ArcSearch {
    std::uint32_t points = 0;
    std::size_t target = 0;
    std::vector<Mask> pair_line;  // points x points
    std::vector<Mask> above;      // bits strictly greater than i

    const Mask& line(std::uint32_t a, std::uint32_t b) const { return pair_line[a * points + b]; }
};

struct ArcResult {
    std::uint64_t nodes = 0;
    std::vector<std::vector<std::uint32_t>> arcs;
};

int popcount(const Mask& m) { return std::popcount(m[0]) + std::popcount(m[1]); }

void arc_dfs(const ArcSearch& s, std::vector<std::uint32_t>& chosen, Mask cand, ArcResult& out) {
    ++out.nodes;
    if (chosen.size() == s.target) {
        out.arcs.push_back(chosen);
        return;
    }
    const std::size_t need = s.target - chosen.size();
    while (static_cast<std::size_t>(popcount(cand)) >= need) {
        const std::size_t w = cand[0] ? 0 : 1;
        const auto x = static_cast<std::uint32_t>(w * 64 + std::countr_zero(cand[w]));
        cand[w] &= cand[w] - 1;
        Mask next = cand;  // already restricted to points above x
        for (auto c : chosen) {
            const auto& l = s.line(c, x);
            next[0] &= ~l[0];
            next[1] &= ~l[1];
        }
        chosen.push_back(x);
        arc_dfs(s, chosen, next, out);
        chosen.pop_back();
    }
}

bool is_verified_hyperoval(const AmbientSpace& space, const PointSet& o) {
    if (o.size() != space.q() + 2) return false;
    const auto spectrum = evensets::secant_spectrum(space, o, 1);
    for (const auto& [i, c] : spectrum.by_count)
        if (i != 0 && i != 2) return false;
    return evensets::is_hyperoval_in(space, o, space.full_space());
}

void require_hyperoval_order(std::uint32_t q) {
    if (q != 2 && q != 4 && q != 8)
        throw Error(ErrorKind::UnsupportedField, "hyperoval search supports q in {2, 4, 8}");
}

std::string set_string(const PointSet& s) {
    std::string out = "{";
    for (auto m : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(m);
    return out + "}";
}

std::string word_key(const codes::CodeVector& c) {
    return {reinterpret_cast<const char*>(c.values().data()), c.values().size()};
}

}  // namespace

ClassificationReport enumerate_hyperovals(std::uint32_t q, unsigned threads, bool certify) {
    require_hyperoval_order(q);
    const auto t0 = std::chrono::steady_clock::now();
    const auto space = AmbientSpace::create(2, q);
    ArcSearch s;
    s.points = space->num_points();
    s.target = q + 2;
    s.pair_line.assign(std::size_t(s.points) * s.points, Mask{});
    s.above.assign(s.points, Mask{});
    for (std::uint32_t a = 0; a < s.points; ++a) {
        for (std::uint32_t b = a + 1; b < s.points; ++b) s.above[a][b >> 6] |= std::uint64_t{1} << (b & 63);
        for (std::uint32_t b = 0; b < s.points; ++b) {
            if (a == b) continue;
            Mask m{};
            for (auto x : space->line_points(a, b)) m[x >> 6] |= std::uint64_t{1} << (x & 63);
            s.pair_line[a * s.points + b] = m;
        }
    }

    std::vector<ArcResult> parts(s.points);
    run_tasks(s.points, threads, [&](std::size_t first) {
        std::vector<std::uint32_t> chosen{static_cast<std::uint32_t>(first)};
        arc_dfs(s, chosen, s.above[first], parts[first]);
    });

    ClassificationReport r;
    r.kind = "hyperovals";
    r.params = {{"n", 2}, {"q", q}};
    r.nodes = 1;  // root
    std::vector<PointSet> found;
    for (auto& part : parts) {
        r.nodes += part.nodes;
        for (auto& arc : part.arcs) found.emplace_back(space->num_points(), arc);
    }
    std::vector<char> good(found.size());
    run_tasks(found.size(), threads, [&](std::size_t i) { good[i] = is_verified_hyperoval(*space, found[i]); });
    for (std::size_t i = 0; i < found.size(); ++i)
        if (!good[i]) r.violations.push_back("not a hyperoval: " + set_string(found[i]));
    std::sort(found.begin(), found.end());
    r.count = found.size();
    if (certify) r.certificates = std::move(found);
    r.wall_time = seconds_since(t0);
    return r;
}

std::uint64_t count_conics(std::uint64_t q) { return q * q * q * q * q - q * q; }

std::uint64_t delta(std::uint32_t q) {
    if (q == 4) return 168;
    if (q == 8) return 32704;
    throw Error(ErrorKind::UnsupportedField, "hyperoval count tabulated only for q in {4, 8}");
}

ClassificationReport enumerate_min_even_sets(int n, std::uint32_t q, unsigned threads, bool certify) {
    if (n == 3 && q == 8)
        throw Error(ErrorKind::ClassificationOutOfBudget,
                    "PG(3,8) is not searched; the classification there rests on the proof, "
                    "checked here only through its ingredients");
    const auto t0 = std::chrono::steady_clock::now();
    const auto space = AmbientSpace::create(n, q);
    if (space->p() != 2) throw Error(ErrorKind::OddCharacteristic, "sets of even type are classified for even q");
    if (n < 2) throw Error(ErrorKind::DimensionOutOfRange, "need n >= 2");
    const auto code = codes::IncidenceCode::build(space, 1);
    const auto mw = codes::enumerate_span_min_weight(space, code.dual_basis(), threads);

    ClassificationReport r;
    r.kind = "min-even";
    r.params = {{"n", n}, {"q", q}};
    r.nodes = mw.visited;
    std::uint64_t expected = q + 2;
    for (int i = 0; i < n - 2; ++i) expected *= q;
    r.tallies["size"] = mw.weight;
    if (mw.weight != expected)
        r.violations.push_back("minimum size " + std::to_string(mw.weight) + ", expected " + std::to_string(expected));

    std::vector<PointSet> sets;
    sets.reserve(mw.words.size());
    for (const auto& w : mw.words) sets.push_back(w.support());
    std::sort(sets.begin(), sets.end());

    std::vector<std::string> why(sets.size());
    run_tasks(sets.size(), threads, [&](std::size_t i) {
        const auto& s = sets[i];
        if (s.size() != expected || !evensets::is_even_type(*space, s)) {
            why[i] = "not an even set of minimum size";
            return;
        }
        if (n == 2) {
            if (!evensets::is_regular_hyperoval(*space, s, space->full_space())) why[i] = "not a regular hyperoval";
            return;
        }
        const auto h = evensets::is_hypercylinder(*space, s);
        if (!h) {
            why[i] = "not a hypercylinder";
            return;
        }
        if (!evensets::is_regular_hyperoval(*space, h->base_hyperoval, h->base_plane))
            why[i] = "base hyperoval not regular";
        if (q == 2 && n == 3) {
            const auto rest = s.complement();
            const auto u = space->span(rest);
            if (u.dim() != 2 || space->points_of(u) != rest) why[i] = "not the complement of a plane";
        }
    });
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (!why[i].empty()) r.violations.push_back(why[i] + ": " + set_string(sets[i]));
    r.count = sets.size();
    r.tallies["verified"] = static_cast<std::uint64_t>(std::count(why.begin(), why.end(), std::string{}));
    if (certify) r.certificates = std::move(sets);
    r.wall_time = seconds_since(t0);
    return r;
}

std::uint64_t count_min_weight_codewords(int n, int k, std::uint32_t q) {
    const auto d = delta(q);
    if (k < 1 || k > n - 1) throw Error(ErrorKind::DimensionOutOfRange, "need 1 <= k <= n-1");
    return geom::gaussian_coefficient(n + 1, k - 1, q) * geom::gaussian_coefficient(n - k + 2, 3, q) * d;
}

ClassificationReport verify_small_weight_theorem(int n, std::uint32_t q, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto space = AmbientSpace::create(n, q);
    const auto code = codes::IncidenceCode::build(space, n - 1);
    const std::uint32_t p = space->p();

    std::uint64_t wmax = 2;
    for (int i = 0; i < n - 1; ++i) wmax *= q;

    std::vector<codes::CodeVector> hyper;
    for (const auto& b : code.blocks()) hyper.push_back(codes::CodeVector::characteristic(space, b));
    std::unordered_set<std::string> multiples, differences;
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::size_t i = 0; i < hyper.size(); ++i) {
            const auto ai = hyper[i].scaled(static_cast<std::uint8_t>(a));
            multiples.insert(word_key(ai));
            for (std::size_t j = 0; j < hyper.size(); ++j)
                if (i != j) differences.insert(word_key(ai - hyper[j].scaled(static_cast<std::uint8_t>(a))));
        }

    ClassificationReport r;
    r.kind = "small-weight";
    r.params = {{"n", n}, {"q", q}, {"k", n - 1}, {"wmax", static_cast<std::int64_t>(wmax)}};
    r.tallies["dimension"] = code.dimension();

    // q = 2: every codeword, not only the light ones, must be one of the four shapes
    const std::size_t limit = q == 2 ? space->num_points() : wmax;
    const auto words = codes::enumerate_codewords_up_to_weight(code, limit, threads);
    std::uint64_t nodes = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) nodes *= p;
    r.nodes = nodes;

    const auto all_one = word_key(codes::CodeVector::all_one(space));
    std::uint64_t n_mult = 0, n_diff = 0, n_all_one = 0;
    for (const auto& w : words) {
        const auto key = word_key(w);
        const bool light = w.weight() <= wmax;
        if (multiples.count(key)) {
            ++n_mult;
        } else if (differences.count(key)) {
            ++n_diff;
        } else if (!light && key == all_one) {
            ++n_all_one;
            continue;
        } else {
            r.violations.push_back("codeword of weight " + std::to_string(w.weight()) + " outside the families: " +
                                   set_string(w.support()));
            continue;
        }
        if (light) ++r.count;
    }
    r.tallies["multiples"] = n_mult;
    r.tallies["differences"] = n_diff;
    if (q == 2) r.tallies["all_one"] = n_all_one;
    r.wall_time = seconds_since(t0);
    return r;
}

bool BoundReport::ok() const {
    if (codes::Rational::of(static_cast<std::int64_t>(min_weight)) < bound) return false;
    if (bound != closed_form) return false;
    return !expected || *expected == min_weight;
}

BoundReport verify_bound_attainment(int n, std::uint32_t q, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto space = AmbientSpace::create(n, q);
    const auto code = codes::IncidenceCode::build(space, 1);
    const auto mw = codes::enumerate_span_min_weight(space, code.dual_basis(), threads);
    BoundReport r;
    r.n = n;
    r.q = q;
    r.min_weight = mw.weight;
    r.min_words = mw.words.size();
    r.bound = codes::design_dual_bound(code.bound_params());
    r.closed_form = codes::line_code_dual_bound(n, q);
    if (space->p() == 2) {
        std::uint64_t e = q + 2;
        for (int i = 0; i < n - 2; ++i) e *= q;
        r.expected = e;
    }
    r.nodes = mw.visited;
    r.wall_time = seconds_since(t0);
    return r;
}

}  // namespace pgcodes::classify
