#include "pgcodes/oracles.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace pgcodes::oracle {

using geom::AmbientSpace;
using geom::Coords;

namespace {

// Calls f(indices) for every k-subset of [0, n) in lexicographic order; stops when f returns false.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::uint32_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<std::uint32_t>(i);
    while (true) {
        if (!f(c)) return;
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

bool meets_all_evenly(const std::vector<PointSet>& lines, const PointSet& s) {
    for (const auto& l : lines)
        if (l.intersection_size(s) % 2) return false;
    return true;
}

std::vector<Coords> vectors_of(const AmbientSpace& space, const std::vector<std::uint32_t>& pts) {
    std::vector<Coords> out;
    for (auto i : pts) {
        auto c = space.coords(i);
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

gf::Elem eval_form(const gf::Field& f, const Coords& form, std::span<const gf::Elem> x) {
    const gf::Elem m[6] = {f.mul(x[0], x[0]), f.mul(x[1], x[1]), f.mul(x[2], x[2]),
                           f.mul(x[0], x[1]), f.mul(x[0], x[2]), f.mul(x[1], x[2])};
    gf::Elem v = 0;
    for (int i = 0; i < 6; ++i) v = f.add(v, f.mul(form[i], m[i]));
    return v;
}

std::vector<PointSet> irreducible_conics(const AmbientSpace& plane, std::uint64_t* forms) {
    const auto& f = plane.field();
    const auto q = plane.q();
    const auto lines = brute_lines(plane);
    std::set<PointSet> seen;
    std::vector<PointSet> out;
    std::uint64_t count = 0;
    Coords form(6, 0);
    std::uint64_t total = 1;
    for (int i = 0; i < 6; ++i) total *= q;
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < 6; ++i, c /= q) form[i] = static_cast<gf::Elem>(c % q);
        // one representative per scalar class
        std::size_t lead = 0;
        while (form[lead] == 0) ++lead;
        if (form[lead] != 1) continue;
        PointSet zeros(plane.num_points());
        for (std::uint32_t p = 0; p < plane.num_points(); ++p)
            if (eval_form(f, form, plane.coords(p)) == 0) zeros.insert(p);
        if (zeros.size() != q + 1) continue;
        bool collinear = false;
        for (const auto& l : lines)
            if (zeros.is_subset_of(l)) collinear = true;
        if (collinear) continue;
        ++count;
        if (seen.insert(zeros).second) out.push_back(zeros);
    }
    if (forms) *forms = count;
    return out;
}

}  // namespace

PointSet closure(const AmbientSpace& space, const std::vector<Coords>& vectors) {
    const auto& f = space.field();
    const auto q = space.q();
    PointSet out(space.num_points());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < vectors.size(); ++i) total *= q;
    Coords v(space.vector_dim());
    for (std::uint64_t code = 1; code < total; ++code) {
        std::fill(v.begin(), v.end(), 0);
        std::uint64_t c = code;
        for (const auto& b : vectors) {
            const auto a = static_cast<gf::Elem>(c % q);
            c /= q;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(a, b[j]));
        }
        bool nonzero = false;
        for (auto x : v) nonzero |= x != 0;
        if (nonzero) out.insert(space.index_of(v));
    }
    return out;
}

std::vector<PointSet> brute_lines(const AmbientSpace& space) {
    std::set<PointSet> lines;
    const auto n = space.num_points();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b) lines.insert(closure(space, vectors_of(space, {a, b})));
    return {lines.begin(), lines.end()};
}

std::uint64_t brute_subspace_count(const AmbientSpace& space, int k) {
    const auto expected = geom::theta(k, space.q());
    std::set<PointSet> spans;
    for_each_combination(space.num_points(), static_cast<std::size_t>(k + 1), [&](const auto& c) {
        auto s = closure(space, vectors_of(space, c));
        if (s.size() == expected) spans.insert(std::move(s));
        return true;
    });
    return spans.size();
}

std::vector<PointSet> brute_even_sets(const AmbientSpace& space, std::size_t size) {
    const auto lines = brute_lines(space);
    std::vector<PointSet> out;
    for_each_combination(space.num_points(), size, [&](const auto& c) {
        PointSet s(space.num_points(), c);
        if (meets_all_evenly(lines, s)) out.push_back(std::move(s));
        return true;
    });
    return out;
}

std::size_t brute_min_even_size(const AmbientSpace& space, std::size_t max_size) {
    const auto lines = brute_lines(space);
    for (std::size_t k = 1; k <= max_size; ++k) {
        bool found = false;
        for_each_combination(space.num_points(), k, [&](const auto& c) {
            found = meets_all_evenly(lines, PointSet(space.num_points(), c));
            return !found;
        });
        if (found) return k;
    }
    return 0;
}

std::vector<PointSet> brute_hyperovals(std::uint32_t q) {
    const auto space = AmbientSpace::create(2, q);
    const auto lines = brute_lines(*space);
    std::vector<PointSet> out;
    for_each_combination(space->num_points(), q + 2, [&](const auto& c) {
        PointSet s(space->num_points(), c);
        bool arc = true;
        for (const auto& l : lines)
            if (l.intersection_size(s) > 2) {
                arc = false;
                break;
            }
        if (arc) out.push_back(std::move(s));
        return true;
    });
    return out;
}

ConicCensus conic_census(std::uint32_t q) {
    const auto plane = AmbientSpace::create(2, q);
    ConicCensus c;
    c.distinct_conics = irreducible_conics(*plane, &c.irreducible_forms).size();
    return c;
}

std::uint64_t five_point_conic_dedup(std::uint32_t q) {
    const auto plane = AmbientSpace::create(2, q);
    const auto conics = irreducible_conics(*plane, nullptr);
    const auto lines = brute_lines(*plane);
    std::set<PointSet> found;
    for_each_combination(plane->num_points(), 5, [&](const auto& c) {
        PointSet five(plane->num_points(), c);
        for (const auto& l : lines)
            if (l.intersection_size(five) > 2) return true;
        const PointSet* hit = nullptr;
        for (const auto& conic : conics)
            if (five.is_subset_of(conic)) {
                if (hit) throw std::logic_error("five points on two conics");
                hit = &conic;
            }
        if (!hit) throw std::logic_error("five points in general position on no conic");
        found.insert(*hit);
        return true;
    });
    return found.size();
}

std::map<std::size_t, std::uint64_t> brute_weight_distribution(const AmbientSpace& space, int k) {
    const auto p = space.p();
    std::set<PointSet> blocks;
    const auto expected = geom::theta(k, space.q());
    for_each_combination(space.num_points(), static_cast<std::size_t>(k + 1), [&](const auto& c) {
        auto s = closure(space, vectors_of(space, c));
        if (s.size() == expected) blocks.insert(std::move(s));
        return true;
    });
    std::vector<PointSet> gens(blocks.begin(), blocks.end());
    double combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) combos *= p;
    if (combos > double(1u << 22)) throw std::length_error("too many generator combinations");

    std::vector<std::uint8_t> v(space.num_points(), 0);
    std::vector<std::uint32_t> digit(gens.size(), 0);
    std::unordered_set<std::string> words;
    words.insert(std::string(v.begin(), v.end()));
    while (true) {
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            gens[i].for_each([&](std::uint32_t x) { v[x] = static_cast<std::uint8_t>((v[x] + 1) % p); });
            if (++digit[i] < p) break;
            digit[i] = 0;
        }
        if (i == gens.size()) break;
        words.insert(std::string(v.begin(), v.end()));
    }
    std::map<std::size_t, std::uint64_t> hist;
    for (const auto& w : words) {
        std::size_t wt = 0;
        for (char x : w) wt += x != 0;
        ++hist[wt];
    }
    return hist;
}

std::set<PointSet> construction_hypercylinders(std::uint32_t q) {
    const auto space = AmbientSpace::create(3, q);
    const auto plane = AmbientSpace::create(2, q);
    const auto ovals = brute_hyperovals(q);
    const auto& f = space->field();
    std::set<PointSet> out;
    Coords v(4);
    for (std::uint32_t vi = 0; vi < space->num_points(); ++vi) {
        const auto vc = space->coords(vi);
        std::size_t lead = 0;
        while (vc[lead] == 0) ++lead;
        // unit vectors other than e_lead span a plane skew to the vertex
        std::vector<std::size_t> axes;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != lead) axes.push_back(i);
        for (const auto& o : ovals) {
            PointSet cyl(space->num_points());
            for (auto pi : o.members()) {
                const auto pc = plane->coords(pi);
                Coords pv(4, 0);
                for (std::size_t t = 0; t < 3; ++t) pv[axes[t]] = pc[t];
                for (gf::Elem a = 0; a < q; ++a) {
                    for (std::size_t j = 0; j < 4; ++j) v[j] = f.add(f.mul(a, vc[j]), pv[j]);
                    cyl.insert(space->index_of(v));
                }
            }
            out.insert(std::move(cyl));
        }
    }
    return out;
}

}  // namespace pgcodes::oracle
