#include "pgcodes/classify.hpp"
#include "pgcodes/codes.hpp"
#include "pgcodes/error.hpp"
#include "pgcodes/evensets.hpp"
#include "pgcodes/io.hpp"
#include "pgcodes/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace pgcodes;
using io::json;

namespace {

constexpr int kUsage = 1;
constexpr int kVerification = 2;

struct Config {
    std::string format = "text";
    unsigned threads = 0;
    std::uint64_t seed = 0;
    bool certify = false;
    bool reproducible = false;
    std::string modulus;

    int n = 2, k = 1, d = 1;
    std::uint32_t q = 2;
    std::string in;
    std::int64_t plane_index = -1;
};

unsigned thread_count(const Config& cfg) {
    if (cfg.threads) return cfg.threads;
    if (const char* env = std::getenv("PGCODES_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw CLI::ValidationError("PGCODES_THREADS", "must be a positive integer");
    }
    return 1;
}

gf::FieldPtr make_field(const Config& cfg) {
    if (cfg.modulus.empty()) return gf::field_for_order(cfg.q);
    std::uint32_t p = 2;
    while (p <= cfg.q && cfg.q % p) ++p;
    std::uint32_t h = 0, r = cfg.q;
    for (; r > 1 && r % p == 0; r /= p) ++h;
    if (cfg.q < 2 || r != 1)
        throw Error(ErrorKind::UnsupportedField, "q = " + std::to_string(cfg.q) + " is not a prime power");
    std::vector<std::uint32_t> m;
    std::stringstream ss(cfg.modulus);
    for (std::string tok; std::getline(ss, tok, ',');) m.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    return gf::field_create(p, h, m);
}

geom::SpacePtr make_space(const Config& cfg) { return geom::AmbientSpace::create(cfg.n, make_field(cfg)); }

void emit(const Config& cfg, const json& j, const std::string& text, const std::string& csv = {}) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << '\n';
    else if (cfg.format == "csv" && !csv.empty())
        std::cout << csv;
    else
        std::cout << text;
}

std::string coords_text(std::span<const gf::Elem> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int field_table(const Config& cfg) {
    const auto f = make_field(cfg);
    json add = json::array(), mul = json::array();
    std::ostringstream text, csv;
    csv << "a,b,sum,product\n";
    text << f->name() << " modulus";
    for (auto c : f->modulus()) text << ' ' << c;
    text << "\n+ and * tables by element index\n";
    for (gf::Elem a = 0; a < f->q(); ++a) {
        json ra = json::array(), rm = json::array();
        for (gf::Elem b = 0; b < f->q(); ++b) {
            ra.push_back(f->add(a, b));
            rm.push_back(f->mul(a, b));
            csv << a << ',' << b << ',' << f->add(a, b) << ',' << f->mul(a, b) << '\n';
        }
        for (auto& x : ra) text << x.get<gf::Elem>() << ' ';
        text << "| ";
        for (auto& x : rm) text << x.get<gf::Elem>() << ' ';
        text << '\n';
        add.push_back(ra);
        mul.push_back(rm);
    }
    json j{{"p", f->p()}, {"h", f->h()}, {"modulus", f->modulus()}, {"add", add}, {"mul", mul}};
    if (!f->canonical()) j["canonical"] = false;
    emit(cfg, j, text.str(), csv.str());
    return 0;
}

int points(const Config& cfg) {
    const auto space = make_space(cfg);
    std::ostringstream text, csv;
    csv << "index";
    for (std::size_t i = 0; i < space->vector_dim(); ++i) csv << ",x" << i;
    csv << '\n';
    for (std::uint32_t i = 0; i < space->num_points(); ++i) {
        text << i << ' ' << coords_text(space->coords(i)) << '\n';
        csv << i;
        for (auto x : space->coords(i)) csv << ',' << x;
        csv << '\n';
    }
    emit(cfg, io::point_set_to_json(*space, PointSet::full(space->num_points())), text.str(), csv.str());
    return 0;
}

int subspaces(const Config& cfg) {
    const auto space = make_space(cfg);
    json list = json::array();
    std::ostringstream text;
    std::uint64_t count = 0;
    space->for_each_subspace(cfg.k, [&](const geom::Subspace& u) {
        ++count;
        list.push_back(io::subspace_to_json(u));
        text << '[';
        for (std::size_t i = 0; i < u.basis().size(); ++i) text << (i ? " " : "") << coords_text(u.basis()[i]);
        text << "]\n";
        return true;
    });
    text << count << " subspaces of dimension " << cfg.k << '\n';
    emit(cfg, json{{"n", cfg.n}, {"q", cfg.q}, {"k", cfg.k}, {"count", count}, {"subspaces", list}}, text.str(),
         "n,q,k,count\n" + std::to_string(cfg.n) + ',' + std::to_string(cfg.q) + ',' + std::to_string(cfg.k) + ',' +
             std::to_string(count) + '\n');
    return 0;
}

int code_dim(const Config& cfg) {
    const auto code = codes::IncidenceCode::build(make_space(cfg), cfg.k);
    json j{{"n", cfg.n}, {"k", cfg.k}, {"q", cfg.q}, {"p", code.p()}, {"length", code.length()},
           {"dimension", code.dimension()}, {"dual_dimension", code.dual_dimension()}};
    std::ostringstream text;
    text << "C_" << cfg.k << '(' << cfg.n << ',' << cfg.q << ") over F_" << code.p() << ": length " << code.length()
         << ", dimension " << code.dimension() << ", dual dimension " << code.dual_dimension() << '\n';
    emit(cfg, j, text.str(),
         "length,dimension,dual_dimension\n" + std::to_string(code.length()) + ',' + std::to_string(code.dimension()) +
             ',' + std::to_string(code.dual_dimension()) + '\n');
    return 0;
}

int check_code(const Config& cfg, bool dual) {
    const auto c = io::code_vector_from_json(io::read_file(cfg.in));
    const auto code = codes::IncidenceCode::build(c.ambient_ptr(), cfg.k);
    const bool in = dual ? code.dual_contains(c) : code.contains(c);
    const std::string key = dual ? "in-dual" : "in-code";
    emit(cfg, json{{key, in}, {"k", cfg.k}, {"weight", c.weight()}}, key + ": " + (in ? "true" : "false") + '\n');
    return 0;
}

int check_even(const Config& cfg) {
    const auto set = io::point_set_from_json(io::read_file(cfg.in));
    const bool even = evensets::is_even_type(*set.space, set.points);
    emit(cfg, json{{"even_type", even}, {"size", set.points.size()}},
         std::string("even-type: ") + (even ? "true" : "false") + '\n');
    return 0;
}

int spectrum(const Config& cfg) {
    const auto set = io::point_set_from_json(io::read_file(cfg.in));
    const auto s = evensets::secant_spectrum(*set.space, set.points, cfg.d);
    std::ostringstream text;
    for (const auto& [i, c] : s.by_count) text << i << "-secant: " << c << '\n';
    emit(cfg, io::spectrum_to_json(s), text.str(), io::spectrum_to_csv(s));
    return 0;
}

int hyperovals(const Config& cfg) {
    const auto r = classify::enumerate_hyperovals(cfg.q, thread_count(cfg), cfg.certify);
    const auto space = geom::AmbientSpace::create(2, cfg.q);
    std::ostringstream text;
    text << "hyperovals in PG(2," << cfg.q << "): " << r.count << '\n';
    emit(cfg, io::report_to_json(space.get(), r, cfg.reproducible), text.str(),
         "q,count\n" + std::to_string(cfg.q) + ',' + std::to_string(r.count) + '\n');
    const std::map<std::uint32_t, std::uint64_t> known{{2, 7}, {4, 168}, {8, 32704}};
    return r.ok() && r.count == known.at(cfg.q) ? 0 : kVerification;
}

int hypercylinder(const Config& cfg) {
    const auto space = make_space(cfg);
    std::mt19937_64 rng(cfg.seed);
    const auto h = evensets::random_hypercylinder(*space, rng);
    const bool even = evensets::is_even_type(*space, h.points);
    std::ostringstream text;
    text << "hypercylinder of size " << h.points.size() << " in PG(" << cfg.n << ',' << cfg.q
         << "), even-type: " << (even ? "true" : "false") << '\n';
    emit(cfg, io::hypercylinder_to_json(*space, h), text.str());
    return even ? 0 : kVerification;
}

int recover_vertex(const Config& cfg) {
    const auto set = io::point_set_from_json(io::read_file(cfg.in));
    const auto v = evensets::recover_vertex(*set.space, set.points);
    if (!v) {
        emit(cfg, json{{"vertex", nullptr}}, "vertex: undefined\n");
        return 0;
    }
    std::ostringstream text;
    text << "vertex of dimension " << v->dim() << ":";
    for (const auto& row : v->basis()) text << ' ' << coords_text(row);
    text << '\n';
    emit(cfg, json{{"vertex", io::subspace_to_json(*v)}, {"dimension", v->dim()}}, text.str());
    return 0;
}

int redei(const Config& cfg) {
    const auto set = io::point_set_from_json(io::read_file(cfg.in));
    const auto planes = set.space->subspaces(2);
    if (cfg.plane_index < 0 || static_cast<std::size_t>(cfg.plane_index) >= planes.size())
        throw CLI::ValidationError("--plane-index", "must lie in [0, " + std::to_string(planes.size()) + ")");
    const auto& plane = planes[static_cast<std::size_t>(cfg.plane_index)];
    const auto lines = evensets::redei_lines(*set.space, set.points, plane);
    json list = json::array();
    std::ostringstream text;
    for (const auto& l : lines) {
        list.push_back(io::subspace_to_json(l));
        text << "Redei line:";
        for (const auto& row : l.basis()) text << ' ' << coords_text(row);
        text << '\n';
    }
    text << lines.size() << " Redei line(s)\n";
    emit(cfg, json{{"plane", io::subspace_to_json(plane)}, {"redei_lines", list}}, text.str());
    return 0;
}

int large_secants(const Config& cfg) {
    const auto set = io::point_set_from_json(io::read_file(cfg.in));
    const auto r = evensets::large_secant_report(*set.space, set.points);
    json list = json::array();
    std::ostringstream text;
    for (const auto& l : r.large_secants) {
        json pts = json::array();
        for (auto i : l.line) pts.push_back(std::vector<gf::Elem>(set.space->coords(i).begin(), set.space->coords(i).end()));
        list.push_back(json{{"line", pts}, {"size", l.size}, {"admissible_subfields", l.admissible_subfields}});
        text << l.size << "-secant, admissible subfields:";
        for (auto s : l.admissible_subfields) text << ' ' << s;
        text << (l.admissible_subfields.empty() ? " none" : "") << '\n';
    }
    text << r.large_secants.size() << " large secant(s), at most one: " << (r.at_most_one() ? "yes" : "no")
         << ", subfield contradiction: " << (r.subfield_contradiction() ? "yes" : "no") << '\n';
    emit(cfg, json{{"large_secants", list}, {"at_most_one", r.at_most_one()},
                   {"subfield_contradiction", r.subfield_contradiction()}},
         text.str());
    return 0;
}

int min_even(const Config& cfg) {
    const auto r = classify::enumerate_min_even_sets(cfg.n, cfg.q, thread_count(cfg), cfg.certify);
    const auto space = geom::AmbientSpace::create(cfg.n, cfg.q);
    std::ostringstream text;
    text << "minimum sets of even type in PG(" << cfg.n << ',' << cfg.q << "): " << r.count << " of size "
         << r.tallies.at("size") << ", " << r.violations.size() << " failed certification\n";
    emit(cfg, io::report_to_json(space.get(), r, cfg.reproducible), text.str(),
         "n,q,size,count\n" + std::to_string(cfg.n) + ',' + std::to_string(cfg.q) + ',' +
             std::to_string(r.tallies.at("size")) + ',' + std::to_string(r.count) + '\n');
    return r.ok() ? 0 : kVerification;
}

int count_formula(const Config& cfg) {
    const auto c = classify::count_min_weight_codewords(cfg.n, cfg.k, cfg.q);
    emit(cfg, json{{"n", cfg.n}, {"k", cfg.k}, {"q", cfg.q}, {"count", c}}, std::to_string(c) + '\n',
         "n,k,q,count\n" + std::to_string(cfg.n) + ',' + std::to_string(cfg.k) + ',' + std::to_string(cfg.q) + ',' +
             std::to_string(c) + '\n');
    return 0;
}

int verify_theorem(const Config& cfg) {
    const auto r = classify::verify_small_weight_theorem(cfg.n, cfg.q, thread_count(cfg));
    std::ostringstream text;
    text << r.count << " nonzero codewords of weight <= " << r.params.at("wmax") << " in C_" << cfg.n - 1 << '('
         << cfg.n << ',' << cfg.q << "), " << r.violations.size() << " outside the expected families\n";
    for (const auto& v : r.violations) text << "  " << v << '\n';
    emit(cfg, io::report_to_json(nullptr, r, cfg.reproducible), text.str());
    return r.ok() ? 0 : kVerification;
}

int verify_bound(const Config& cfg) {
    const auto r = classify::verify_bound_attainment(cfg.n, cfg.q, thread_count(cfg));
    std::ostringstream text;
    text << "minimum weight of C_1(" << cfg.n << ',' << cfg.q << ")^perp: " << r.min_weight << ", bound "
         << r.bound.str();
    if (r.expected) text << ", expected " << *r.expected;
    text << ", " << (r.ok() ? "ok" : "FAILED") << '\n';
    emit(cfg, io::bound_report_to_json(r, cfg.reproducible), text.str());
    return r.ok() ? 0 : kVerification;
}

int paper_suite(const Config& cfg) {
    suite::Options opt;
    opt.threads = thread_count(cfg);
    opt.seed = cfg.seed;
    bool all = true;
    json list = json::array();
    suite::run_all(opt, [&](const suite::CriterionResult& r) {
        all = all && r.pass;
        if (cfg.format == "json") {
            json j{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"details", r.details}};
            if (!cfg.reproducible) j["seconds"] = r.seconds;
            list.push_back(j);
        } else {
            std::cout << suite::format(r, cfg.reproducible) << std::flush;
        }
    });
    if (cfg.format == "json") std::cout << json{{"criteria", list}, {"pass", all}}.dump(2) << '\n';
    return all ? 0 : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes of points and subspaces of finite projective spaces, and sets of even type"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (default: PGCODES_THREADS or 1)");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
    app.add_flag("--certify", cfg.certify, "Emit certificates");
    app.add_flag("--reproducible", cfg.reproducible, "Omit wall-clock times");
    app.add_option("--modulus", cfg.modulus, "Defining polynomial, comma-separated, constant term first");

    auto opt_n = [&](CLI::App* s) { s->add_option("--n", cfg.n, "Projective dimension")->required(); };
    auto opt_q = [&](CLI::App* s) { s->add_option("--q", cfg.q, "Field order")->required(); };
    auto opt_k = [&](CLI::App* s) { s->add_option("--k", cfg.k, "Subspace dimension")->required(); };
    auto opt_in = [&](CLI::App* s) { s->add_option("--in", cfg.in, "Input JSON file")->required(); };

    std::map<CLI::App*, int (*)(const Config&)> handlers;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Config&)) {
        auto* s = app.add_subcommand(name, help);
        handlers[s] = fn;
        return s;
    };

    auto* s = sub("field-table", "Addition and multiplication tables of GF(q)", field_table);
    opt_q(s);
    s = sub("points", "Points of PG(n,q) in canonical order", points);
    opt_n(s), opt_q(s);
    s = sub("subspaces", "k-spaces of PG(n,q) in canonical order", subspaces);
    opt_n(s), opt_q(s), opt_k(s);
    s = sub("code-dim", "Dimension of C_k(n,q) and its dual", code_dim);
    opt_n(s), opt_q(s), opt_k(s);
    s = sub("check-in-code", "Membership of a code vector in C_k(n,q)",
            [](const Config& c) { return check_code(c, false); });
    opt_k(s), opt_in(s);
    s = sub("check-dual", "Membership of a code vector in C_k(n,q)^perp",
            [](const Config& c) { return check_code(c, true); });
    opt_k(s), opt_in(s);
    s = sub("check-even", "Whether a point set meets every line evenly", check_even);
    opt_in(s);
    s = sub("spectrum", "Intersection sizes with all d-spaces", spectrum);
    opt_in(s);
    s->add_option("--d", cfg.d, "Subspace dimension")->capture_default_str();
    s = sub("hyperovals", "Enumerate the hyperovals of PG(2,q), q in {2,4,8}", hyperovals);
    opt_q(s);
    s = sub("hypercylinder", "Random hypercylinder in PG(n,q)", hypercylinder);
    opt_n(s), opt_q(s);
    s = sub("recover-vertex", "Intersection of the hyperplanes missing a set", recover_vertex);
    opt_in(s);
    s = sub("redei", "Redei lines of a plane with respect to a set", redei);
    opt_in(s);
    s->add_option("--plane-index", cfg.plane_index, "Plane, by position in canonical order")->required();
    s = sub("large-secants", "Lines meeting a set in more than q/2 points", large_secants);
    opt_in(s);
    s = sub("min-even", "Classify the smallest sets of even type in PG(n,q)", min_even);
    opt_n(s), opt_q(s);
    s = sub("count-formula", "Number of minimum weight words of C_k(n,q)^perp, q in {4,8}", count_formula);
    opt_n(s), opt_q(s), opt_k(s);
    s = sub("verify-theorem", "Classify light codewords of C_{n-1}(n,q)", verify_theorem);
    opt_n(s), opt_q(s);
    s = sub("verify-bound", "Minimum weight of C_1(n,q)^perp against the lower bound", verify_bound);
    opt_n(s), opt_q(s);
    sub("paper-suite", "Run the acceptance battery", paper_suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        for (auto* s : app.get_subcommands()) return handlers.at(s)(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
