#include "doctest.h"
#include "nac/partition.hpp"

using namespace nac;

namespace {

Partition pb(int n, const std::vector<std::vector<int>>& blocks) {
    return Partition::from_blocks(n, blocks);
}

// brute-force greatest lower bound over the whole lattice
Partition brute_glb(const Partition& p, const Partition& q, const std::vector<Partition>& all) {
    const Partition* best = nullptr;
    for (const Partition& r : all) {
        if (!refines(r, p) || !refines(r, q)) continue;
        if (!best || refines(*best, r)) best = &r;
    }
    REQUIRE(best != nullptr);
    return *best;
}

Partition brute_lub(const Partition& p, const Partition& q, const std::vector<Partition>& all) {
    const Partition* best = nullptr;
    for (const Partition& r : all) {
        if (!refines(p, r) || !refines(q, r)) continue;
        if (!best || refines(r, *best)) best = &r;
    }
    REQUIRE(best != nullptr);
    return *best;
}

}  // namespace

TEST_CASE("block_of") {
    Partition p = pb(3, {{0, 1}, {2}});
    CHECK(p.block_of(1) == std::vector<int>{0, 1});
    CHECK(Partition::discrete(3).block_of(2) == std::vector<int>{2});
    CHECK(Partition::one_block(3).block_of(0) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(p.block_of(5), error);
    CHECK_THROWS_AS(p.block_of(-1), error);
}

TEST_CASE("refines") {
    Partition split = pb(3, {{0}, {1, 2}});
    Partition other = pb(3, {{0, 1}, {2}});
    CHECK(refines(split, Partition::one_block(3)));
    CHECK_FALSE(refines(split, other));
    CHECK(refines(split, split));
    CHECK_THROWS_AS(refines(split, Partition::discrete(2)), error);
}

TEST_CASE("meet") {
    Partition split = pb(3, {{0}, {1, 2}});
    Partition other = pb(3, {{0, 1}, {2}});
    CHECK(meet(split, other) == Partition::discrete(3));
    CHECK(meet(split, split) == split);
    CHECK(meet(split, Partition::one_block(3)) == split);
}

TEST_CASE("join") {
    Partition split = pb(3, {{0}, {1, 2}});
    Partition other = pb(3, {{0, 1}, {2}});
    CHECK(join(split, other) == Partition::one_block(3));
    CHECK(join(split, split) == split);
    CHECK(join(Partition::discrete(3), other) == other);
}

TEST_CASE("all_partitions counts") {
    CHECK(all_partitions(1).size() == 1);
    CHECK(all_partitions(3).size() == 5);
    CHECK(all_partitions(4).size() == 15);
    CHECK_THROWS_AS(all_partitions(partition_enumeration_bound() + 1), error);
}

TEST_CASE("bell numbers") {
    std::vector<uint64_t> expected{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
        CHECK(bell_number(n) == expected[n]);
    }
}

TEST_CASE("coarsenings") {
    CHECK(coarsenings(Partition::discrete(3)) == all_partitions(3));
    Partition top = Partition::one_block(3);
    CHECK(coarsenings(top) == std::vector<Partition>{top});
    Partition split = pb(3, {{0}, {1, 2}});
    CHECK(coarsenings(split) == std::vector<Partition>{split, top});
    for (const Partition& p : all_partitions(4)) {
        CHECK(coarsenings(p).size() == bell_number(p.block_count()));
    }
}

TEST_CASE("canonical form is unique") {
    CHECK(pb(3, {{2}, {0, 1}}) == pb(3, {{1, 0}, {2}}));
    CHECK(pb(4, {{3, 1}, {0, 2}}) == pb(4, {{0, 2}, {1, 3}}));
    CHECK_THROWS_AS(pb(3, {{0, 1}}), error);          // missing point
    CHECK_THROWS_AS(pb(3, {{0, 1}, {1, 2}}), error);  // overlap
    CHECK_THROWS_AS(pb(3, {{0, 1, 2}, {}}), error);   // empty block
}

TEST_CASE("refines is a partial order (exhaustive to size 4)") {
    for (int n = 1; n <= 4; ++n) {
        auto all = all_partitions(n);
        for (const Partition& p : all) {
            CHECK(refines(p, p));
            for (const Partition& q : all) {
                if (refines(p, q) && refines(q, p)) CHECK(p == q);
                for (const Partition& r : all) {
                    if (refines(p, q) && refines(q, r)) CHECK(refines(p, r));
                }
            }
        }
    }
}

TEST_CASE("meet and join are the lattice bounds (exhaustive to size 4)") {
    for (int n = 1; n <= 4; ++n) {
        auto all = all_partitions(n);
        for (const Partition& p : all) {
            for (const Partition& q : all) {
                Partition m = meet(p, q);
                Partition j = join(p, q);
                CHECK(m == meet(q, p));
                CHECK(j == join(q, p));
                CHECK(m == brute_glb(p, q, all));
                CHECK(j == brute_lub(p, q, all));
                CHECK(meet(p, j) == p);  // absorption
                CHECK(join(p, m) == p);
            }
        }
    }
    // associativity, spot-checked exhaustively at size 3
    auto all3 = all_partitions(3);
    for (const Partition& p : all3) {
        for (const Partition& q : all3) {
            for (const Partition& r : all3) {
                CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
                CHECK(join(join(p, q), r) == join(p, join(q, r)));
            }
        }
    }
}

TEST_CASE("rendering") {
    Carrier c = Carrier::indexed(3);
    CHECK(format_partition(c, pb(3, {{0}, {1, 2}})) == "0 | 1 2");
    CHECK(format_set(c, {0, 2}) == "{0,2}");
    CHECK(format_set(c, {}) == "{}");
}

TEST_CASE("carrier validation") {
    CHECK_THROWS_AS(Carrier(std::vector<std::string>{}), error);
    CHECK_THROWS_AS(Carrier({"a", "a"}), error);
    CHECK_THROWS_AS(Carrier({"a b"}), error);
    CHECK_THROWS_AS(Carrier({"->"}), error);
    CHECK_THROWS_AS(Carrier({"gen"}), error);  // format keywords are reserved
    CHECK_THROWS_AS(Carrier({"a|b"}), error);
    CHECK(Carrier::indexed(2).index_of("1") == 1);
    CHECK(Carrier::indexed(2).index_of("x") == -1);
}
