#pragma once

#include <vector>

#include "nac/completion.hpp"

namespace nac {

// On a finite carrier every filter is principal; the generating set is
// kept and the per-member block family is recomputed for display.
struct SetFilter {
    Carrier carrier;
    std::vector<int> generating_set;  // sorted, nonempty (proper filter)

    bool operator==(const SetFilter&) const = default;
    bool operator<(const SetFilter& other) const { return generating_set < other.generating_set; }
};

// true iff the meet of any two generators stays in the stack; members are
// coarser than generators so this covers all member pairs.
bool is_intersection_closed(const NASpace& x);

// The operations below require an intersection-closed T0 space; other
// inputs are rejected.
void require_uniform_case(const NASpace& x);

// filter generated by the intersection of the chosen generator blocks
SetFilter filter_of_choice(const NASpace& x, const ChoiceFunction& f);

// Reads the unique coherent block family from the filter: per generator,
// the block containing the generating set.
ChoiceFunction choice_of_filter(const NASpace& x, const SetFilter& f);

// All minimal Cauchy filters, via the choice-function correspondence,
// sorted by generating set.
std::vector<SetFilter> minimal_cauchy_filters(const NASpace& x);

// Definition-level oracle: every principal filter that contains a block
// of every stack member, kept only when inclusion-minimal (no Cauchy
// filter with a strictly larger generating set).
std::vector<SetFilter> minimal_cauchy_filter_oracle(const NASpace& x);

// true iff every neighborhood block of the point belongs to the filter.
bool filter_converges(const NASpace& x, const SetFilter& f, int point);

// The block family (z_P per stack member, canonical member order).
std::vector<std::vector<int>> filter_block_family(const NASpace& x, const SetFilter& f);

}  // namespace nac
