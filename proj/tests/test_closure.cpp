#include "doctest.h"
#include "nac/closure.hpp"
#include "nac/enumerate.hpp"

using namespace nac;

namespace {

Partition pb(int n, const std::vector<std::vector<int>>& blocks) {
    return Partition::from_blocks(n, blocks);
}

NASpace tri() {
    return make_space(Carrier::indexed(3), {pb(3, {{0}, {1, 2}}), pb(3, {{0, 1}, {2}})});
}

}  // namespace

TEST_CASE("zeta_closure on the three-point fixture") {
    NASpace t = tri();
    ClosureReport r = zeta_closure(t, {0, 2});
    CHECK(r.closure == std::vector<int>{0, 2});
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].point == 1);
    CHECK(r.witnesses[0].first == pb(3, {{0}, {1, 2}}));
    CHECK(r.witnesses[0].second == pb(3, {{0, 1}, {2}}));

    CHECK(zeta_closure(t, {0}).closure == std::vector<int>{0});
    CHECK(zeta_closure(t, {0, 1, 2}).closure == std::vector<int>{0, 1, 2});
    CHECK(zeta_closure(t, {}).closure.empty());
}

TEST_CASE("exclusion witnesses certify their points") {
    for (int n = 1; n <= 3; ++n) {
        for (const NASpace& x : all_spaces(n, false)) {
            for (const auto& m : all_subsets(n)) {
                ClosureReport r = zeta_closure(x, m);
                for (const ExclusionWitness& w : r.witnesses) {
                    CHECK(contains(x, w.first));
                    CHECK(contains(x, w.second));
                    // the pair coincides on m
                    for (int a : m) {
                        for (int b : m) {
                            CHECK((w.first.block_id_of(a) == w.first.block_id_of(b)) ==
                                  (w.second.block_id_of(a) == w.second.block_id_of(b)));
                        }
                    }
                    // and excludes the point
                    bool hit = false;
                    for (int p : m) {
                        if (w.first.block_id_of(p) == w.first.block_id_of(w.point) &&
                            w.second.block_id_of(p) == w.second.block_id_of(w.point)) {
                            hit = true;
                        }
                    }
                    CHECK_FALSE(hit);
                }
            }
        }
    }
}

TEST_CASE("regular closure oracle") {
    NASpace t = tri();
    CHECK(regular_closure_oracle(t, {0, 2}) == std::vector<int>{0, 2});
    CHECK(regular_closure_oracle(t, {0, 1, 2}) == std::vector<int>{0, 1, 2});
    NASpace i2 = indiscrete_space(Carrier::indexed(2));
    CHECK(regular_closure_oracle(i2, {0}) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(
        regular_closure_oracle(indiscrete_space(Carrier::indexed(6)), {0}), error);
}

// literal definition, all ordered member pairs, no grouping or cuts
TEST_CASE("zeta matches a straight full-pair scan (exhaustive to size 3)") {
    for (int n = 1; n <= 3; ++n) {
        for (const NASpace& x : all_spaces(n, false)) {
            auto members = stack_members(x);
            for (const auto& m : all_subsets(n)) {
                std::vector<int> literal;
                for (int pt = 0; pt < n; ++pt) {
                    bool adherent = true;
                    for (const Partition& e1 : members) {
                        for (const Partition& e2 : members) {
                            bool coincide = true;
                            for (int a : m) {
                                for (int b : m) {
                                    if ((e1.block_id_of(a) == e1.block_id_of(b)) !=
                                        (e2.block_id_of(a) == e2.block_id_of(b))) {
                                        coincide = false;
                                    }
                                }
                            }
                            if (!coincide) continue;
                            bool meets = false;
                            for (int p : m) {
                                if (e1.block_id_of(p) == e1.block_id_of(pt) &&
                                    e2.block_id_of(p) == e2.block_id_of(pt)) {
                                    meets = true;
                                    break;
                                }
                            }
                            if (!meets) adherent = false;
                        }
                    }
                    if (adherent) literal.push_back(pt);
                }
                CHECK(zeta_closure(x, m).closure == literal);
            }
        }
    }
}

TEST_CASE("zeta equals the regular closure oracle (spot checks)") {
    std::vector<NASpace> spaces = all_spaces(3, false);
    spaces.push_back(make_space(Carrier::indexed(4), {pb(4, {{0, 1}, {2, 3}}),
                                                      pb(4, {{0}, {1}, {2, 3}})}));
    for (const NASpace& x : spaces) {
        for (const auto& m : all_subsets(x.size())) {
            CHECK(zeta_closure(x, m).closure == regular_closure_oracle(x, m));
        }
    }
}

TEST_CASE("density and closedness predicates") {
    NASpace t = tri();
    CHECK(is_zeta_closed(t, {0, 2}));
    CHECK_FALSE(is_zeta_dense(t, {0, 2}));
    CHECK(is_zeta_closed(t, {0, 1, 2}));
    CHECK(is_zeta_dense(t, {0, 1, 2}));
}

TEST_CASE("closure laws on the fixture") {
    NASpace t = tri();
    for (const auto& m : all_subsets(3)) {
        auto cm = zeta_closure(t, m).closure;
        CHECK(std::includes(cm.begin(), cm.end(), m.begin(), m.end()));
        for (const auto& nset : all_subsets(3)) {
            if (!std::includes(nset.begin(), nset.end(), m.begin(), m.end())) continue;
            auto cn = zeta_closure(t, nset).closure;
            CHECK(std::includes(cn.begin(), cn.end(), cm.begin(), cm.end()));
        }
    }
}

TEST_CASE("hereditariness on the fixture") {
    NASpace t = tri();
    std::vector<int> s{0, 2};
    NASpace sub = subspace(t, s);
    // closure of {0} inside the subspace = closure in the whole space, cut to s
    auto inside = zeta_closure(sub, {0}).closure;
    std::vector<int> inside_in_t;
    for (int i : inside) inside_in_t.push_back(s[i]);
    auto outside = zeta_closure(t, {0}).closure;
    std::vector<int> expected;
    std::set_intersection(outside.begin(), outside.end(), s.begin(), s.end(),
                          std::back_inserter(expected));
    CHECK(inside_in_t == expected);
}

TEST_CASE("input validation") {
    NASpace t = tri();
    CHECK_THROWS_AS(zeta_closure(t, {7}), error);
    // duplicates are tolerated and normalized
    CHECK(zeta_closure(t, {0, 0, 2}).input == std::vector<int>{0, 2});
}
