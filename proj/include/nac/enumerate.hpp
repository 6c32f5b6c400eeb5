#pragma once

#include <cstdint>
#include <vector>

#include "nac/space.hpp"

namespace nac {

struct InstanceBudget {
    int max_carrier = 4;
    int exhaustive_to = 3;
    int sample_count = 200;
    uint64_t seed = 42;

    void validate() const;
};

// Deterministic 64-bit linear congruential generator. Constants are fixed
// so sampled instances are identical across runs and platforms:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// and each draw returns the top 31 bits.
struct Lcg {
    uint64_t state;

    explicit Lcg(uint64_t seed) : state(seed) {}
    uint32_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<uint32_t>(state >> 33);
    }
    uint32_t below(uint32_t n) { return next() % n; }
};

// One space per distinct stack on the carrier {0..n-1}: every antichain
// of non-top partitions, the empty antichain being the indiscrete space.
// Canonical (lexicographic) order, no duplicates.
std::vector<NASpace> all_spaces(int n, bool t0_only);

// All |Y|^|X| tables in lexicographic order, optionally filtered by
// uniform continuity.
std::vector<std::vector<int>> all_functions(const NASpace& x, const NASpace& y, bool uc_only);

// budget.sample_count spaces on {0..n-1}, drawn with the pinned generator
// seeded from budget.seed and n. Each draw picks 1..3 partitions
// uniformly from the canonical partition list and normalizes them.
std::vector<NASpace> sample_spaces(int n, const InstanceBudget& budget);

// All subsets of {0..n-1} in bitmask order (empty set first).
std::vector<std::vector<int>> all_subsets(int n);

}  // namespace nac
