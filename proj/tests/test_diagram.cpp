#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "linksub/diagram.hpp"
#include "linksub/errors.hpp"

using namespace linksub;

namespace {

std::vector<size_t> face_degrees(const DiagramMap& dm) {
    std::vector<size_t> deg;
    for (auto& f : dm.map.face_orbits()) deg.push_back(f.size());
    std::sort(deg.begin(), deg.end());
    return deg;
}

} // namespace

TEST_CASE("hopf map: V=2 E=4 F=4, all bigons") {
    auto d = fixture_diagram("hopf.pd");
    auto dm = build_planar_map(d);
    CHECK(dm.map.vertex_orbits().size() == 2);
    CHECK(dm.map.live_darts() == 8);
    CHECK(face_degrees(dm) == std::vector<size_t>{2, 2, 2, 2});
    CHECK(dm.map.euler_characteristic() == 2);
}

TEST_CASE("trefoil map: face degrees {2,2,2,3,3}") {
    auto dm = build_planar_map(fixture_diagram("trefoil.pd"));
    CHECK(dm.map.vertex_orbits().size() == 3);
    CHECK(face_degrees(dm) == std::vector<size_t>{2, 2, 2, 3, 3});
}

TEST_CASE("borromean map: V=6 E=12 F=8, all triangles") {
    auto dm = build_planar_map(fixture_diagram("borromean.pd"));
    CHECK(dm.map.vertex_orbits().size() == 6);
    CHECK(dm.map.live_darts() == 24);
    CHECK(face_degrees(dm) == std::vector<size_t>{3, 3, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("every vertex is 4-valent and twin is an involution") {
    for (const char* f : {"hopf.pd", "trefoil.pd", "fig8.pd", "borromean.pd", "k8_18.pd"}) {
        auto dm = build_planar_map(fixture_diagram(f));
        for (auto& v : dm.map.vertex_orbits()) CHECK(v.size() == 4);
        for (Dart d = 0; d < dm.map.dart_slots(); ++d) {
            CHECK(dm.map.twin[dm.map.twin[d]] == d);
            CHECK(dm.map.twin[d] != d);
        }
    }
}

TEST_CASE("non-planar rotation system is rejected") {
    // swapping two entries of a trefoil tuple breaks the sphere embedding
    auto bad = parse_pd_code("X 1,4,5,2 / X 3,6,4,1 / X 5,2,6,3");
    CHECK_THROWS_AS(build_planar_map(bad), parse_error);
}

TEST_CASE("admissible fixtures validate all-true") {
    for (const char* f : {"hopf.pd", "trefoil.pd", "fig8.pd", "t25.pd", "t26.pd", "t27.pd",
                          "borromean.pd", "k8_18.pd", "t29.pd", "t2_10.pd"}) {
        auto d = fixture_diagram(f);
        auto dm = build_planar_map(d);
        auto r = validate(d, dm);
        INFO(f);
        CHECK(r.admissible());
    }
}

TEST_CASE("one-crossing unknot is non-reduced with the nugatory crossing as witness") {
    auto d = fixture_diagram("unknot1.pd");
    auto dm = build_planar_map(d);
    auto r = validate(d, dm);
    CHECK_FALSE(r.reduced);
    REQUIRE(r.nugatory_crossings.size() == 1);
    CHECK(r.nugatory_crossings[0] == 1);
    CHECK(r.alternating);
}

TEST_CASE("granny diagram fails primality with a two-shared-edges witness") {
    auto d = fixture_diagram("granny.pd");
    auto dm = build_planar_map(d);
    auto r = validate(d, dm);
    CHECK(r.alternating);
    CHECK(r.reduced);
    CHECK(r.non_split);
    CHECK_FALSE(r.prime);
    REQUIRE_FALSE(r.prime_violations.empty());
    CHECK(r.prime_violations[0].arcs.size() >= 2);
}

TEST_CASE("disjoint union of two hopf diagrams is split with component witness") {
    auto d = fixture_diagram("split2.pd");
    auto dm = build_planar_map(d);
    auto r = validate(d, dm);
    CHECK_FALSE(r.non_split);
    REQUIRE(r.components.size() == 2);
    CHECK(r.components[0] == std::vector<int>{1, 2});
    CHECK(r.components[1] == std::vector<int>{3, 4});
}

TEST_CASE("non-alternating input is reported with the offending arc") {
    // trefoil with one crossing's over/under flipped (rotate tuple by one)
    auto d = parse_pd_code("X 4,2,5,1 / X 3,6,4,1 / X 5,2,6,3");
    auto dm = build_planar_map(d);
    auto r = validate(d, dm);
    CHECK_FALSE(r.alternating);
    CHECK_FALSE(r.bad_arcs.empty());
}

TEST_CASE("validate is invariant under crossing relabeling") {
    auto d = fixture_diagram("granny.pd");
    std::mt19937 rng(3);
    LinkDiagram p = d;
    std::shuffle(p.crossings.begin(), p.crossings.end(), rng);
    auto ra = validate(d, build_planar_map(d));
    auto rb = validate(p, build_planar_map(p));
    CHECK(ra.alternating == rb.alternating);
    CHECK(ra.reduced == rb.reduced);
    CHECK(ra.prime == rb.prime);
    CHECK(ra.non_split == rb.non_split);
}

TEST_CASE("validate is invariant under reflection of all rotation orders") {
    // reflecting the diagram: reverse each tuple keeping slot 0 first
    for (const char* f : {"trefoil.pd", "fig8.pd", "granny.pd"}) {
        auto d = fixture_diagram(f);
        LinkDiagram refl = d;
        for (auto& c : refl.crossings)
            c.arcs = {c.arcs[0], c.arcs[3], c.arcs[2], c.arcs[1]};
        auto ra = validate(d, build_planar_map(d));
        auto rb = validate(refl, build_planar_map(refl));
        INFO(f);
        CHECK(ra.alternating == rb.alternating);
        CHECK(ra.reduced == rb.reduced);
        CHECK(ra.prime == rb.prime);
        CHECK(ra.non_split == rb.non_split);
    }
}
