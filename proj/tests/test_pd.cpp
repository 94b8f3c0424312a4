#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "linksub/errors.hpp"
#include "linksub/pd.hpp"

using namespace linksub;

TEST_CASE("hopf parses to two crossings and four arcs") {
    auto d = parse_pd_code("X 1,4,2,3 / X 3,2,4,1");
    CHECK(d.crossing_count() == 2);
    CHECK(d.arc_count == 4);
    CHECK(d.crossings[0].arcs == std::array<int, 4>{1, 4, 2, 3});
    CHECK(component_count(d) == 2);
}

TEST_CASE("trefoil parses with six arcs, one component") {
    auto d = parse_pd_code("X 1,4,2,5 / X 3,6,4,1 / X 5,2,6,3");
    CHECK(d.crossing_count() == 3);
    CHECK(d.arc_count == 6);
    CHECK(component_count(d) == 1);
}

TEST_CASE("one-crossing unknot parses (rejected later by validation)") {
    auto d = parse_pd_code("X 1,1,2,2");
    CHECK(d.crossing_count() == 1);
    CHECK(d.arc_count == 2);
    CHECK(component_count(d) == 1);
}

TEST_CASE("comments, blank lines and inline separators") {
    auto d = parse_pd_code("# a comment\n\n  X 1,4,2,3   # trailing\nX 3,2,4,1\n");
    CHECK(d.crossing_count() == 2);
}

TEST_CASE("parse errors carry location") {
    CHECK_THROWS_AS(parse_pd_code(""), parse_error);
    CHECK_THROWS_AS(parse_pd_code("   \n \n"), parse_error);
    try {
        parse_pd_code("X 1,4,2,3\nY 3,2,4,1");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_pd_code("X 1,4,2"), parse_error);
    CHECK_THROWS_AS(parse_pd_code("X 1,4,2,0"), parse_error);
    CHECK_THROWS_AS(parse_pd_code("X 1,4,2,3 junk"), parse_error);
    // arc multiplicity
    CHECK_THROWS_AS(parse_pd_code("X 1,4,2,3 / X 3,2,4,4"), parse_error);
}

TEST_CASE("emit_pd is canonical and reparses to an isomorphic diagram") {
    auto d = fixture_diagram("trefoil.pd");
    std::string once = emit_pd(d);
    auto d2 = parse_pd_code(once);
    CHECK(emit_pd(d2) == once); // bit-exact fixed point
    CHECK(d2.crossing_count() == d.crossing_count());
    CHECK(d2.arc_count == d.arc_count);

    // tuple rotation by two is the same crossing; writer normalizes it
    auto a = parse_pd_code("X 1,4,2,3\nX 3,2,4,1");
    auto b = parse_pd_code("X 2,3,1,4\nX 4,1,3,2");
    CHECK(emit_pd(a) == emit_pd(b));
}

TEST_CASE("relabeling arcs leaves structure invariant") {
    auto d = fixture_diagram("fig8.pd");
    std::mt19937 rng(7);
    std::vector<int> perm(d.arc_count + 1);
    for (int i = 1; i <= d.arc_count; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    LinkDiagram r = d;
    for (auto& c : r.crossings)
        for (int& a : c.arcs) a = perm[a];
    CHECK(component_count(r) == component_count(d));
    CHECK(r.arc_count == d.arc_count);
}
