// Runs every acceptance criterion and prints one pass/fail line per criterion.
// Exit code is the number of failed criteria.

#include <cstdio>

#include "blockade/acceptance.hpp"

int main() {
    int failed = 0;
    blockade::acceptance::run_all([&](const blockade::acceptance::CriterionResult& r) {
        std::printf("criterion %2d %s: %s\n", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str());
        for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    });
    std::printf("%d of %d criteria passed\n", blockade::acceptance::kCriterionCount - failed,
                blockade::acceptance::kCriterionCount);
    return failed;
}
