// Runs every acceptance check on its default grid and prints one line per
// criterion. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "cubic/errors.hpp"
#include "cubic/verify.hpp"

int main(int argc, char** argv) {
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const auto& names = cubic::verify_names();
    int failed = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        cubic::VerifyReport r;
        try {
            r = cubic::run_verify(names[i]);
        } catch (const cubic::CubicError& e) {
            r.name = names[i];
            r.passed = false;
            r.summary = std::string("FAIL ") + names[i] + ": " + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verbose)
            for (const auto& l : r.lines) std::cout << "    " << l << "\n";
        std::printf("criterion %zu %-14s %s  (%s, %.1fs)\n", i + 1, names[i].c_str(), r.passed ? "PASS" : "FAIL",
                    r.summary.c_str(), secs);
        if (!r.passed) {
            ++failed;
            std::cout << r.diff.dump() << "\n";
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(names.size()) - failed, names.size());
    return failed == 0 ? 0 : 1;
}
