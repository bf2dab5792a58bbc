// Acceptance battery: runs every criterion at the pinned sizes and prints one
// pass/fail line per criterion.  Exit code 0 iff all pass.

#include <cstdio>
#include <cstring>

#include "kschur/suite.hpp"

int main(int argc, char** argv) {
    kschur::SuiteParams params; // the pinned acceptance sizes
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    bool all_pass = true;
    auto report = [&](const kschur::CriterionResult& r) {
        const char* status = r.pass ? "PASS" : r.inconclusive ? "INCONCLUSIVE" : "FAIL";
        std::printf("%-4s criterion %2d: %-48s (%s, %lld ms)\n", status, r.id, r.name.c_str(),
                    r.detail.c_str(), r.millis);
        std::fflush(stdout);
        all_pass &= r.pass;
    };
    if (only > 0) {
        report(kschur::run_criterion(only, params));
    } else {
        for (int id = 1; id <= 11; ++id) report(kschur::run_criterion(id, params));
    }
    return all_pass ? 0 : 1;
}
