#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tangle/errors.hpp"
#include "tangle/normal_form.hpp"
#include "tangle/oracle.hpp"
#include "tangle/surface_model.hpp"

using namespace tangle;

TEST_CASE("normality detection") {
    CHECK(is_normal(realize(parse_coordinate("0,0,0,0,0,0"))));
    CHECK(is_normal(realize(parse_coordinate("2,-3,2,-3,4,-3"))));
    CHECK(is_normal(realize(parse_coordinate("2,0,2,0,0,0"))));
    CHECK_FALSE(is_normal(realize(parse_coordinate("0,0,2,-2,6,-1"))));
}

TEST_CASE("first violation is located in window order") {
    ArcSystem s = realize(parse_coordinate("0,0,2,-2,6,-1"));
    auto v = find_violation(s);
    REQUIRE(v.has_value());
    CHECK(v->window == 1);
    CHECK(v->pos == 0);
    CHECK(v->arc == 2);
    CHECK(s.words[1][0] == s.words[1][1]); // the named pair really is equal

    CHECK_FALSE(find_violation(realize(parse_coordinate("2,0,2,0,0,0"))).has_value());
}

TEST_CASE("bridge replacement removes the pair and drops the weight") {
    ArcSystem s = realize(parse_coordinate("0,0,2,-2,6,-1"));
    ArcSystem t = bridge_replace(s, *find_violation(s));
    CHECK(t.dehn == parse_coordinate("0,0,0,0,2,0"));
    CHECK(t.dehn.weight() < s.dehn.weight());
}

TEST_CASE("bridge replacement rejects a position that is not a violation") {
    ArcSystem s = realize(parse_coordinate("2,0,2,0,0,0")); // words [12][21][]
    CHECK_THROWS_AS(bridge_replace(s, NormalityViolation{0, 0, 1}), NotAViolation);
}

TEST_CASE("normalization golden") {
    int steps = 0;
    ArcSystem n = normalize(realize(parse_coordinate("0,0,2,-2,6,-1")), &steps);
    CHECK(n.dehn == DehnCoordinate());
    CHECK(steps == 2);
}

TEST_CASE("normalization is the identity on normal systems") {
    int steps = -1;
    ArcSystem s = realize(parse_coordinate("2,-3,2,-3,4,-3"));
    CHECK(normalize(s, &steps).dehn == s.dehn);
    CHECK(steps == 0);
}

TEST_CASE("normalization over the small corpus: normal output, monotone weight") {
    for (const DehnCoordinate& c : enumerate_valid(6, 2)) {
        ArcSystem s = realize(c);
        int steps = 0;
        ArcSystem n = normalize(s, &steps);
        CHECK(is_normal(n));
        CHECK(n.dehn.weight() <= c.weight());
        if (is_normal(s)) {
            CHECK(n.dehn == c);
            CHECK(steps == 0);
        } else {
            CHECK(n.dehn.weight() < c.weight());
            CHECK(steps > 0);
        }
    }
}
