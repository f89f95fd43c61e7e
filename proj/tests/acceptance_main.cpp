#include <iostream>

#include "distprod/acceptance.hpp"

int main() {
    distprod::acceptance::SuiteResult res = distprod::acceptance::run_suite(&std::cout, 4);
    std::cout << (res.all_pass ? "acceptance suite: all criteria pass"
                               : "acceptance suite: FAILURES present")
              << std::endl;
    return res.all_pass ? 0 : 1;
}
