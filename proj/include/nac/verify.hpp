#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nac/enumerate.hpp"

namespace nac {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long instances = 0;
    std::string note;            // short deterministic summary detail
    std::string counterexample;  // .nas document reproducing the failure
};

// Suite names, in run order. Each corresponds to one acceptance property.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const InstanceBudget& budget);

struct VerifyOptions {
    InstanceBudget budget;
    std::vector<std::string> suites;  // empty = all
};

// Prints one line per suite on out (and counterexamples, in file format);
// diagnostics go to err. Returns 0 when every suite passes, 1 when a
// counterexample was found, 2 on usage errors (unknown suite, bad budget).
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace nac
