#pragma once

#include <utility>
#include <vector>

#include "nac/partition.hpp"

namespace nac {

// A finite non-Archimedean space: a carrier plus the antichain of minimal
// partitions generating an upward-closed family under refinement. The
// family always contains the one-block partition; the one-block partition
// itself is never stored, so the indiscrete space has no generators.
struct NASpace {
    Carrier carrier;
    std::vector<Partition> generators;  // canonical antichain, sorted

    int size() const { return carrier.size(); }
    bool operator==(const NASpace&) const = default;
};

// Normalizes an arbitrary list of partitions on c to the generator
// antichain: duplicates and the one-block partition are dropped, and any
// partition refined by another given one is absorbed.
NASpace make_space(Carrier c, std::vector<Partition> parts);

// Materializes every member of the stack (coarsenings of the generators
// plus the one-block partition), canonically sorted.
std::vector<Partition> stack_members(const NASpace& x);

// true iff q belongs to the stack, i.e. some generator refines q.
bool contains(const NASpace& x, const Partition& q);

NASpace discrete_space(Carrier c);
NASpace indiscrete_space(Carrier c);

// Separation: distinct points lie in distinct blocks of some member.
// Equivalent to the meet of all generators being discrete, since
// generators are the finest members.
bool is_t0(const NASpace& x);

// Initial structure for a family of maps out of c: the space generated by
// the preimages of each target's generators. Preimages of coarser members
// are coarser, so generator preimages generate the whole preimage family.
NASpace initial_structure(const Carrier& c,
                          const std::vector<std::pair<std::vector<int>, NASpace>>& maps);

// Initial structure of the inclusion of s (sorted distinct point indices).
NASpace subspace(const NASpace& x, const std::vector<int>& s);

struct Product {
    NASpace space;
    std::vector<std::vector<int>> projections;  // one table per factor
};

// Cartesian product with initial structure for the projections. Tuple
// indexing is row-major in the given factor order; labels are the factor
// labels joined with ','.
Product product(const std::vector<NASpace>& factors);

}  // namespace nac
