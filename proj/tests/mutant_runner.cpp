// Runs the default identity suite against a library built with a seeded
// defect. Exit 0 means the defect was detected by at least one report.
#include <iostream>

#include "pqpoly/identity_suite.hpp"

int main() {
    const auto reports = pqpoly::run_all(pqpoly::SuiteConfig{});
    int failing = 0;
    for (const auto& r : reports) {
        if (r.passed()) continue;
        ++failing;
        std::cout << "failing: " << r.id << " " << r.cells_passed << "/" << r.cells_total << '\n';
    }
    if (failing == 0) {
        std::cout << "mutant survived\n";
        return 1;
    }
    std::cout << "mutant killed by " << failing << " report(s)\n";
    return 0;
}
