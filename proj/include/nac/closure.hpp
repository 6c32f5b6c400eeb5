#pragma once

#include <vector>

#include "nac/space.hpp"

namespace nac {

// Certificate that a point lies outside the closure: the two stack
// members agree on the input set, yet their blocks at the point meet the
// set in nothing.
struct ExclusionWitness {
    int point;
    Partition first;
    Partition second;
};

struct ClosureReport {
    std::vector<int> input;    // sorted
    std::vector<int> closure;  // sorted, always contains input
    std::vector<ExclusionWitness> witnesses;  // one per excluded point
};

// x is adherent to m when every pair of stack members that agree on m
// relates x to m simultaneously: E1[x] & E2[x] & m is nonempty. The empty
// set has empty closure (the intersection condition fails for every x).
ClosureReport zeta_closure(const NASpace& x, std::vector<int> m);

// Independent oracle: x adheres to m iff every pair of uniformly
// continuous maps into the discrete space on size+2 points that agree on
// m also agree at x. Brute force over all function pairs filtered by
// uniform continuity; carrier size is capped.
std::vector<int> regular_closure_oracle(const NASpace& x, std::vector<int> m, int bound = 5);

bool is_zeta_dense(const NASpace& x, const std::vector<int>& m);
bool is_zeta_closed(const NASpace& x, const std::vector<int>& m);

}  // namespace nac
