// One line per criterion; nonzero exit if any fails.
#include "pgcodes/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    pgcodes::suite::Options opt;
    bool verbose = false;
    app.add_option("--threads", opt.threads)->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed);
    app.add_flag("-v,--verbose", verbose);
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    pgcodes::suite::run_all(opt, [&](const pgcodes::suite::CriterionResult& r) {
        if (!r.pass) ++failed;
        if (verbose) {
            std::cout << pgcodes::suite::format(r, false);
        } else {
            std::printf("%s %d %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        }
        std::cout.flush();
    });
    std::printf("%d/9 criteria passed\n", 9 - failed);
    return failed ? 1 : 0;
}
