// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Flags: --extended (transfer up to n = 3), --seed N.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "isopieri/verify.hpp"

using namespace isopieri;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds, 0 for none
    std::function<VerifyReport(const VerifyOptions&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--extended") {
            opt.extended = true;
        } else if (a == "--seed" && i + 1 < argc) {
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::cerr << "usage: acceptance [--extended] [--seed N]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "fixture expansions, both families", 1.0, [](const VerifyOptions&) { return verify_expansion_fixtures(); }},
        {2, "rule equals symmetric-function oracle, n <= 5", 0, verify_pieri_oracle},
        {3, "duality over F_3, n <= 3", 0, verify_duality},
        {4, "triple counts over F_5, n = 3, R = 20", 0, verify_triple},
        {5, "two-line fixtures over Q: lines and chart parameters", 1.0, verify_rational_fixture},
        {6, "rank-six solver closed forms, 100 samples per family", 1.0, verify_solver_fixture},
        {7, "column-count identities, n <= 6", 0, verify_column_counts},
        {8, "iterated products commute, n <= 5", 0, verify_commutativity},
        {9, "reconstruction singleton over F_5, n = 3", 0, verify_reconstruction},
        {10, std::string("orthogonal-to-symplectic transfer over F_3, n <= ") + (opt.extended ? "3" : "2"), 0,
         verify_transfer},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        VerifyReport r;
        try {
            r = c.run(opt);
        } catch (const std::exception& e) {
            r.name = c.title;
            r.fail(std::string("threw: ") + e.what());
        }
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        bool ok = r.passed;
        std::string note;
        if (c.time_limit > 0 && took.count() >= c.time_limit) {
            ok = false;
            note = ", over the time limit";
        }
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << r.instances
                  << " instances, " << r.failure_count << " failures, " << std::fixed << std::setprecision(2)
                  << took.count() << " s" << note << ")\n";
        for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed (seed " << opt.seed << ")\n";
    return failed == 0 ? 0 : 1;
}
