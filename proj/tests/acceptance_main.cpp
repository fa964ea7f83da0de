// Acceptance suite runner: executes the verification criteria at full depth
// and prints one pass/fail line per criterion. With --criterion <id> it runs
// a single criterion (used by the per-criterion ctest entries).

#include <cstring>
#include <iostream>
#include <string>

#include "gasket/verify.hpp"

int main(int argc, char** argv) {
    gasket::VerifyOptions options;
    options.profile = gasket::VerifyProfile::full;

    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = argv[++i];
        } else if (std::strcmp(argv[i], "--quick") == 0) {
            options.profile = gasket::VerifyProfile::quick;
        } else {
            std::cerr << "usage: acceptance [--criterion <id>] [--quick]\n";
            return 2;
        }
    }

    std::vector<gasket::CriterionResult> results;
    if (only.empty()) {
        results = gasket::run_verification(options);
    } else {
        results.push_back(gasket::run_criterion(only, options));
    }
    return gasket::print_report(results, std::cout);
}
