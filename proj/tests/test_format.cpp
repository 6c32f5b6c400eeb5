#include "doctest.h"
#include "nac/enumerate.hpp"
#include "nac/format.hpp"

using namespace nac;

namespace {

const char* kFixture =
    "# fixture file\n"
    "space TRI\n"
    "points 0 1 2\n"
    "gen 0 | 1 2\n"
    "gen 0 1 | 2\n"
    "\n"
    "space DSC3\n"
    "points 0 1 2\n"
    "gen 0 | 1 | 2\n"
    "\n"
    "map u TRI -> DSC3\n"
    "0 -> 0\n"
    "1 -> 1\n"
    "2 -> 1\n";

Partition pb(int n, const std::vector<std::vector<int>>& blocks) {
    return Partition::from_blocks(n, blocks);
}

}  // namespace

TEST_CASE("parse the fixture") {
    Document doc = parse(kFixture);
    REQUIRE(doc.spaces.size() == 2);
    REQUIRE(doc.maps.size() == 1);

    const NASpace* tri = doc.find_space("TRI");
    REQUIRE(tri != nullptr);
    CHECK(tri->carrier.names == std::vector<std::string>{"0", "1", "2"});
    CHECK(tri->generators ==
          std::vector<Partition>{pb(3, {{0}, {1, 2}}), pb(3, {{0, 1}, {2}})});

    const Document::MapDecl* u = doc.find_map("u");
    REQUIRE(u != nullptr);
    CHECK(u->map.table == std::vector<int>{0, 1, 1});
    CHECK(u->domain_name == "TRI");
    CHECK(u->codomain_name == "DSC3");
}

TEST_CASE("emit canonicalizes block and generator spelling") {
    Document scrambled = parse("space S\npoints 0 1 2\ngen 2 | 1 0\ngen 2 1 | 0\n");
    Document tidy = parse("space S\npoints 0 1 2\ngen 0 1 | 2\ngen 0 | 1 2\n");
    CHECK(emit(scrambled) == emit(tidy));
    CHECK(emit(tidy) == "space S\npoints 0 1 2\ngen 0 | 1 2\ngen 0 1 | 2\n");
}

TEST_CASE("round trip is idempotent") {
    std::string once = emit(parse(kFixture));
    CHECK(emit(parse(once)) == once);

    InstanceBudget budget;
    budget.sample_count = 40;
    for (const NASpace& x : sample_spaces(4, budget)) {
        Document doc;
        doc.spaces.push_back(Document::SpaceDecl{"S", x});
        std::string text = emit(doc);
        Document back = parse(text);
        REQUIRE(back.spaces.size() == 1);
        CHECK(back.spaces[0].space == x);
        CHECK(emit(back) == text);
    }
}

TEST_CASE("a non-uniformly-continuous map is rejected naming the generator") {
    const char* text =
        "space TRI\npoints 0 1 2\ngen 0 | 1 2\ngen 0 1 | 2\n\n"
        "space D\npoints a b c\ngen a | b | c\n\n"
        "map f TRI -> D\n0 -> a\n1 -> b\n2 -> c\n";
    CHECK_THROWS_WITH_AS(parse(text), doctest::Contains("a | b | c"), parse_error);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse("space A\npoints 0 1\nbogus line\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }

    try {
        parse("space A\npoints 0 1\ngen 0 | 0 1\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);  // overlapping blocks
    }
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS(parse("space A\npoints 0 1\n\nspace A\npoints 0\n"), parse_error);
    CHECK_THROWS_AS(parse("space A\npoints 0 0\n"), parse_error);
    CHECK_THROWS_AS(parse("space A\npoints 0 1\ngen 0 | 9\n"), parse_error);
    CHECK_THROWS_AS(parse("gen 0 | 1\n"), parse_error);
    CHECK_THROWS_AS(parse("map f A -> B\n"), parse_error);
    CHECK_THROWS_AS(parse("space A\npoints 0 1\n\nmap f A -> A\n0 -> 0\n"), parse_error);
    CHECK_THROWS_AS(parse("space A\npoints 0 1\n\nmap f A -> A\n0 -> 0\n0 -> 1\n1 -> 0\n"),
                    parse_error);
    CHECK_THROWS_AS(parse("space A\npoints 0 1\nspace 0 extra\n"), parse_error);
}

TEST_CASE("maps can only reference declared spaces") {
    CHECK_THROWS_AS(parse("map f X -> Y\n"), parse_error);
    const char* forward =
        "map f A -> A\n0 -> 0\n\nspace A\npoints 0\n";
    CHECK_THROWS_AS(parse(forward), parse_error);
}
