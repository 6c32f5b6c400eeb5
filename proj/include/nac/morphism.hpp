#pragma once

#include <vector>

#include "nac/space.hpp"

namespace nac {

// Partition of the table's domain whose relation identifies x and y
// exactly when their images share a block of q.
Partition preimage_partition(const std::vector<int>& table, const Partition& q);

// Uniform continuity tested against the codomain's generators only:
// preimages are monotone in the partition and stacks are upward closed,
// so generator preimages landing in the domain stack is sufficient.
bool is_uniformly_continuous(const std::vector<int>& table, const NASpace& x, const NASpace& y);

// Literal test over every materialized stack member of the codomain.
bool is_uniformly_continuous_full(const std::vector<int>& table, const NASpace& x,
                                  const NASpace& y);

struct UCMap {
    NASpace domain;
    NASpace codomain;
    std::vector<int> table;

    // Validates totality and uniform continuity; the error message names
    // the first offending codomain generator.
    static UCMap make(NASpace domain, NASpace codomain, std::vector<int> table);

    int operator()(int x) const { return table[x]; }
    std::vector<int> image() const;  // sorted distinct values
    bool is_injective() const;
    bool is_surjective() const;

    bool operator==(const UCMap&) const = default;
};

UCMap identity_map(const NASpace& x);
UCMap compose(const UCMap& g, const UCMap& f);  // g after f

// injective and initial: the domain structure equals the initial
// structure along the map.
bool is_embedding(const UCMap& f);

// epimorphisms are the maps with zeta-dense image (requires T0 ends).
bool is_epimorphism(const UCMap& f);

// extremal monomorphisms are the zeta-closed embeddings (requires T0).
bool is_extremal_mono(const UCMap& f);

bool is_isomorphism(const UCMap& f);

// Canonical embedding of a T0 space into the product of discrete spaces
// over all of its stack members, x -> (block of x in P)_P.
struct CogeneratorEmbedding {
    std::vector<Partition> factors;  // stack members, canonical order
    Product prod;
    UCMap map;
};

CogeneratorEmbedding cogenerator_embedding(const NASpace& x);

}  // namespace nac
