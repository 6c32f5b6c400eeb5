#pragma once

#include <optional>
#include <vector>

#include "nac/morphism.hpp"

namespace nac {

// An order-preserving block selection, stored compactly as one block
// index per generator. Join-consistency of the assignment (the chosen
// blocks of any two generators land in the same block of their join)
// makes the derived value on every coarser stack member well defined and
// monotone: agreement at the join propagates upward through containment.
struct ChoiceFunction {
    std::vector<int> chosen;  // block index per generator, generator order

    bool operator==(const ChoiceFunction&) const = default;
    bool operator<(const ChoiceFunction& other) const { return chosen < other.chosen; }
};

// All consistent generator assignments in lexicographic order. Agrees
// with brute-force enumeration of order-preserving maps over the full
// materialized stack (tested equivalence).
std::vector<ChoiceFunction> enumerate_choice_functions(const NASpace& x);

// The block of stack member q induced by f: the unique block containing
// the chosen block of any generator refining q.
int value_block_id(const NASpace& x, const ChoiceFunction& f, const Partition& q);

// Intersection of the chosen generator blocks.
std::vector<int> limit_points(const NASpace& x, const ChoiceFunction& f);

// The unique limit when the intersection is a singleton (always the case
// for convergent choice functions on T0 spaces), otherwise empty.
std::optional<int> limit(const NASpace& x, const ChoiceFunction& f);

struct CompletenessReport {
    bool complete = false;
    std::optional<ChoiceFunction> witness;  // first non-converging choice function
};

// Requires T0: every choice function must converge.
CompletenessReport completeness(const NASpace& x);
bool is_complete(const NASpace& x);

struct CompletionResult {
    NASpace hat_space;
    UCMap j;                             // x -> (P -> block of x in P)
    std::vector<ChoiceFunction> points;  // per hat carrier index
    std::vector<int> new_points;         // hat indices with empty limit set
};

// The completion: carrier is every choice function (images of j first in
// carrier order, then new points in lexicographic assignment order);
// structure is generated by one partition per generator, grouping choice
// functions by their value at that generator. Verifies eagerly that the
// result is T0 and complete and that j is a dense embedding.
CompletionResult complete(const NASpace& x);

// Tuples of the cogenerator product whose coordinates are monotone along
// refinement; contract: equals the zeta-closure of the embedded image.
std::vector<int> order_compatible_points(const CogeneratorEmbedding& e);
std::vector<int> order_compatible_points(const NASpace& x);

// Unique extension of u along j to the completion of u's domain; the
// codomain must be complete (and T0). Each hat point is sent to the limit
// of the pushed-forward choice function.
UCMap extend_map(const UCMap& u, const CompletionResult& domain_hat);
UCMap extend_map(const UCMap& u);

struct InjectivityReport {
    bool injective = true;
    std::optional<UCMap> witness_dense_embedding;  // v: A -> B
    std::optional<UCMap> witness_map;              // f: A -> X with no extension
};

// Exhaustive search over dense embeddings v: A -> B between enumerated T0
// spaces with |A| <= bound and |B| <= bound + 1, asking for an extension
// of every uniformly continuous f: A -> X along v. Codomains get one
// extra point so that a single non-converging choice function can be
// adjoined to an image; with |B| capped at the bound itself no proper
// dense embedding exists among small spaces and the test is vacuous.
// Sound refuter; confirms only up to the bound.
InjectivityReport is_injective_within(const NASpace& x, int bound);

// Completion of a morphism: the extension of (j_cod . v) along j_dom.
// Contract: an isomorphism exactly when v is a zeta-dense embedding.
UCMap induced_completion_map(const UCMap& v, const CompletionResult& domain_hat,
                             const CompletionResult& codomain_hat);
UCMap induced_completion_map(const UCMap& v);

}  // namespace nac
