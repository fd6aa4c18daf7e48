#include <iomanip>
#include <iostream>

#include "urysohn/acceptance.hpp"

int main() {
    using namespace urysohn::acceptance;
    bool all = true;
    for (const auto& r : run_all(Config{})) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << r.id << ": " << r.title
                  << "  (" << r.cases << " cases, " << std::fixed << std::setprecision(2) << r.seconds << " s";
        if (r.budget) {
            std::cout << " of " << *r.budget << " s";
        }
        std::cout << ")";
        if (!r.detail.empty()) {
            std::cout << "  " << r.detail;
        }
        std::cout << '\n';
    }
    std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
    return all ? 0 : 1;
}
