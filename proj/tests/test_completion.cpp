#include "doctest.h"
#include "nac/closure.hpp"
#include "nac/completion.hpp"
#include "nac/enumerate.hpp"

using namespace nac;

namespace {

Partition pb(int n, const std::vector<std::vector<int>>& blocks) {
    return Partition::from_blocks(n, blocks);
}

NASpace tri() {
    return make_space(Carrier::indexed(3), {pb(3, {{0}, {1, 2}}), pb(3, {{0, 1}, {2}})});
}

NASpace dsc3() { return discrete_space(Carrier::indexed(3)); }

// two incomparable generators whose join is a proper stack member
NASpace cross4() {
    return make_space(Carrier::indexed(4),
                      {pb(4, {{0, 1}, {2}, {3}}), pb(4, {{0}, {1}, {2, 3}})});
}

}  // namespace

TEST_CASE("enumerate_choice_functions") {
    std::vector<ChoiceFunction> tri_fns = enumerate_choice_functions(tri());
    REQUIRE(tri_fns.size() == 4);
    CHECK(tri_fns[0].chosen == std::vector<int>{0, 0});
    CHECK(tri_fns[1].chosen == std::vector<int>{0, 1});
    CHECK(tri_fns[2].chosen == std::vector<int>{1, 0});
    CHECK(tri_fns[3].chosen == std::vector<int>{1, 1});

    CHECK(enumerate_choice_functions(dsc3()).size() == 3);
    CHECK(enumerate_choice_functions(indiscrete_space(Carrier::indexed(3))).size() == 1);

    // join-consistency prunes: 3x3 raw assignments, 4 survive
    std::vector<ChoiceFunction> cross_fns = enumerate_choice_functions(cross4());
    REQUIRE(cross_fns.size() == 4);
    CHECK(cross_fns[0].chosen == std::vector<int>{0, 0});
    CHECK(cross_fns[1].chosen == std::vector<int>{1, 0});
    CHECK(cross_fns[2].chosen == std::vector<int>{2, 1});
    CHECK(cross_fns[3].chosen == std::vector<int>{2, 2});
}

TEST_CASE("derived member values are monotone") {
    for (const NASpace& x : all_spaces(3, false)) {
        auto members = stack_members(x);
        for (const ChoiceFunction& f : enumerate_choice_functions(x)) {
            for (const Partition& p : members) {
                int bp = value_block_id(x, f, p);
                for (const Partition& q : members) {
                    if (!refines(p, q)) continue;
                    int bq = value_block_id(x, f, q);
                    auto inner = p.block_members(bp);
                    auto outer = q.block_members(bq);
                    CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
                }
            }
        }
    }
}

TEST_CASE("limit") {
    NASpace t = tri();
    CHECK(limit(t, ChoiceFunction{{0, 0}}) == 0);
    CHECK(limit(t, ChoiceFunction{{0, 1}}) == std::nullopt);
    CHECK(limit(t, ChoiceFunction{{1, 0}}) == 1);
    CHECK(limit(t, ChoiceFunction{{1, 1}}) == 2);
    // the limit of a point's own choice function is the point
    for (int n = 1; n <= 3; ++n) {
        for (const NASpace& x : all_spaces(n, true)) {
            CompletionResult c = complete(x);
            for (int pt = 0; pt < x.size(); ++pt) CHECK(limit(x, c.points[pt]) == pt);
        }
    }
}

TEST_CASE("completeness") {
    CompletenessReport tri_report = completeness(tri());
    CHECK_FALSE(tri_report.complete);
    REQUIRE(tri_report.witness.has_value());
    CHECK(tri_report.witness->chosen == std::vector<int>{0, 1});

    CHECK(is_complete(dsc3()));
    CHECK(is_complete(discrete_space(Carrier({"p"}))));
    CHECK(is_complete(cross4()));  // complete but neither discrete nor intersection-closed

    NASpace f3 = make_space(Carrier::indexed(3), {pb(3, {{0}, {1, 2}}), pb(3, {{0, 2}, {1}}),
                                                  pb(3, {{0, 1}, {2}})});
    CHECK_FALSE(is_complete(f3));

    CHECK_THROWS_AS(completeness(indiscrete_space(Carrier::indexed(2))), error);
}

TEST_CASE("complete on the three-point fixture") {
    NASpace t = tri();
    CompletionResult c = complete(t);
    CHECK(c.hat_space.size() == 4);
    CHECK(c.hat_space.carrier.names == std::vector<std::string>{"0", "1", "2", "w0"});
    CHECK(c.new_points == std::vector<int>{3});
    CHECK(c.points[3].chosen == std::vector<int>{0, 1});
    CHECK(c.j.table == std::vector<int>{0, 1, 2});

    // structure: value-at-generator partitions {0,w0 | 1,2} and {0,1 | 2,w0}
    std::vector<Partition> expected{pb(4, {{0, 1}, {2, 3}}), pb(4, {{0, 3}, {1, 2}})};
    CHECK(c.hat_space.generators == expected);

    CHECK(is_t0(c.hat_space));
    CHECK(is_complete(c.hat_space));
    CHECK(is_embedding(c.j));
    CHECK(is_zeta_dense(c.hat_space, c.j.image()));
    CHECK(is_epimorphism(c.j));
    CHECK_FALSE(is_extremal_mono(c.j));
}

TEST_CASE("complete on already complete spaces") {
    CompletionResult c = complete(dsc3());
    CHECK(c.hat_space.size() == 3);
    CHECK(c.new_points.empty());
    CHECK(is_isomorphism(c.j));

    CompletionResult cp = complete(discrete_space(Carrier({"p"})));
    CHECK(cp.hat_space.size() == 1);
    CHECK(is_isomorphism(cp.j));

    CHECK_THROWS_AS(complete(indiscrete_space(Carrier::indexed(2))), error);
}

TEST_CASE("completing the completion is an isomorphism") {
    for (int n = 1; n <= 3; ++n) {
        for (const NASpace& x : all_spaces(n, true)) {
            CompletionResult c = complete(x);
            CHECK(is_isomorphism(complete(c.hat_space).j));
        }
    }
}

TEST_CASE("order_compatible_points") {
    CogeneratorEmbedding et = cogenerator_embedding(tri());
    auto tuples = order_compatible_points(et);
    CHECK(tuples == std::vector<int>{0, 1, 2, 3});  // the entire 4-point product
    CHECK(tuples == zeta_closure(et.prod.space, et.map.image()).closure);

    CogeneratorEmbedding ed = cogenerator_embedding(dsc3());
    auto dtuples = order_compatible_points(ed);
    CHECK(dtuples == ed.map.image());  // complete: nothing beyond the image
    CHECK(dtuples.size() == 3);
}

TEST_CASE("extend") {
    NASpace t = tri();
    NASpace d3 = dsc3();
    CompletionResult hat = complete(t);
    UCMap u = UCMap::make(t, d3, {0, 1, 1});
    UCMap uhat = extend_map(u, hat);
    CHECK(uhat.table == std::vector<int>{0, 1, 1, 0});  // the new point lands on 0

    // extending the canonical embedding along itself is the identity
    UCMap jhat = extend_map(hat.j, hat);
    CHECK(jhat.table == identity_map(hat.hat_space).table);

    // the codomain must be complete
    UCMap into_tri = identity_map(t);
    CHECK_THROWS_AS(extend_map(into_tri, hat), error);
}

TEST_CASE("the extension is the unique one agreeing on the image") {
    for (int n = 1; n <= 3; ++n) {
        for (const NASpace& x : all_spaces(n, true)) {
            CompletionResult hat = complete(x);
            for (int m = 1; m <= 3; ++m) {
                for (const NASpace& y : all_spaces(m, true)) {
                    if (!is_complete(y)) continue;
                    for (const auto& ut : all_functions(x, y, true)) {
                        UCMap u = UCMap::make(x, y, ut);
                        UCMap uhat = extend_map(u, hat);
                        int matches = 0;
                        for (const auto& table : all_functions(hat.hat_space, y, true)) {
                            bool agrees = true;
                            for (int pt = 0; pt < x.size(); ++pt) {
                                if (table[hat.j.table[pt]] != u.table[pt]) {
                                    agrees = false;
                                    break;
                                }
                            }
                            if (agrees) {
                                ++matches;
                                CHECK(table == uhat.table);
                            }
                        }
                        CHECK(matches == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("completion labels stay distinct when a point is already named w0") {
    NASpace odd = make_space(Carrier({"w0", "1", "2"}),
                             {Partition::from_blocks(3, {{0}, {1, 2}}),
                              Partition::from_blocks(3, {{0, 1}, {2}})});
    CompletionResult c = complete(odd);
    CHECK(c.hat_space.carrier.names == std::vector<std::string>{"w0", "1", "2", "w0_"});
}

TEST_CASE("is_injective_within") {
    CHECK(is_injective_within(discrete_space(Carrier({"p"})), 2).injective);
    CHECK(is_injective_within(dsc3(), 3).injective);

    InjectivityReport tri_report = is_injective_within(tri(), 3);
    CHECK_FALSE(tri_report.injective);
    REQUIRE(tri_report.witness_dense_embedding.has_value());
    REQUIRE(tri_report.witness_map.has_value());
    // the witness is a genuine dense embedding with no extension
    const UCMap& v = *tri_report.witness_dense_embedding;
    CHECK(is_embedding(v));
    CHECK(is_zeta_dense(v.codomain, v.image()));
}

TEST_CASE("induced_completion_map") {
    NASpace t = tri();
    UCMap id = identity_map(t);
    CompletionResult hat = complete(t);
    UCMap induced_id = induced_completion_map(id, hat, hat);
    CHECK(induced_id.table == identity_map(hat.hat_space).table);

    // non-dense inclusion: domain completion has 2 points, codomain 4
    NASpace sub = subspace(t, {0, 2});
    UCMap incl = UCMap::make(sub, t, {0, 2});
    UCMap induced_incl = induced_completion_map(incl);
    CHECK(induced_incl.domain.size() == 2);
    CHECK(induced_incl.codomain.size() == 4);
    CHECK_FALSE(is_isomorphism(induced_incl));
}
