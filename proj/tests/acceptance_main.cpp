// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <qsnorm/verification.hpp>

int main(int argc, char** argv) {
    qsnorm::acceptance::Config cfg;
    if (argc > 1) cfg.jobs = std::max(1, std::atoi(argv[1]));
    bool all = true;
    for (const auto& r : qsnorm::acceptance::run_all(cfg)) {
        std::printf("%s\n", r.line().c_str());
        std::fflush(stdout);
        all = all && r.passed();
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
