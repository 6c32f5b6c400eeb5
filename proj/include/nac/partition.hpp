#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nac {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite point set. Points are dense indices 0..size()-1; labels matter
// only at the I/O boundary. Labels must be distinct, nonempty, free of
// whitespace and of the file-format metacharacters '|' '#' "->", and not
// one of the format keywords (space, points, gen, map).
struct Carrier {
    std::vector<std::string> names;

    Carrier() = default;
    explicit Carrier(std::vector<std::string> labels);
    static Carrier indexed(int n);  // labels "0", "1", ..., "n-1"

    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& label) const;  // -1 if unknown

    bool operator==(const Carrier&) const = default;
};

// Partition of {0..n-1} in canonical form: block_id_of is a restricted
// growth string (block 0 contains point 0, each later block is numbered
// when its minimum element is first seen). Two partitions are equal as
// block families iff their canonical forms are identical.
class Partition {
public:
    Partition() = default;

    // Accepts arbitrary integer block ids and canonicalizes them.
    static Partition from_block_ids(const std::vector<int>& ids);
    // Validates that blocks are nonempty, disjoint and cover 0..n-1.
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static Partition discrete(int n);
    static Partition one_block(int n);

    int size() const { return n_; }
    int block_count() const { return count_; }
    int block_id_of(int x) const;
    std::vector<int> block_of(int x) const;           // sorted members
    std::vector<int> block_members(int id) const;     // sorted members
    int block_min(int id) const;                      // minimum element of a block
    std::vector<std::vector<int>> blocks() const;     // canonical order

    bool is_discrete() const { return count_ == n_; }
    bool is_one_block() const { return count_ == 1; }

    bool operator==(const Partition&) const = default;
    // Lexicographic on the canonical block list; this is the canonical
    // order used for sorting generator lists and stack members.
    bool operator<(const Partition& other) const;

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<int> id_;
};

// true iff every block of p is contained in some block of q.
bool refines(const Partition& p, const Partition& q);

// Coarsest common refinement: blocks are the nonempty pairwise
// intersections. Greatest lower bound of the refinement order.
Partition meet(const Partition& p, const Partition& q);

// Finest common coarsening: connected components of the union of the
// two relations. Least upper bound of the refinement order.
Partition join(const Partition& p, const Partition& q);

// Maximum carrier size for exhaustive partition enumeration; defaults to
// 8 (Bell(8) = 4140) and can be overridden with env var NAC_MAX_BELL.
int partition_enumeration_bound();

uint64_t bell_number(int n);

// All set partitions of an n-element carrier, canonically ordered.
// Requires n <= partition_enumeration_bound().
std::vector<Partition> all_partitions(int n);

// All partitions coarser than p (including p and the one-block
// partition), obtained as partitions of p's block set. Requires
// p.block_count() <= partition_enumeration_bound().
std::vector<Partition> coarsenings(const Partition& p);

// Rendering at the I/O boundary: "0 1 | 2" and "{0,2}".
std::string format_partition(const Carrier& c, const Partition& p);
std::string format_set(const Carrier& c, const std::vector<int>& points);

}  // namespace nac
