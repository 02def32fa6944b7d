#include <doctest.h>

#include <clutterkit/cores.hpp>
#include <clutterkit/cycle_covers.hpp>

#include "helpers.hpp"

using namespace clutterkit;
using testkit::clutter_of;
using testkit::q6;

TEST_CASE("core of Q6 is Q6") {
    CoreResult r = core(q6());
    CHECK(r.core == q6());
    CHECK_FALSE(r.idealness_assumed);
    CHECK(core_support(q6()) == q6());
}

TEST_CASE("core of the full square cuboid is itself") {
    ZeroOneSet square = ZeroOneSet::of(2, {BitVector::from_string("00"), BitVector::from_string("01"),
                                           BitVector::from_string("10"), BitVector::from_string("11")});
    Clutter c = cuboid(square);
    CHECK(core(c).core == c);
    CHECK(core_support(c) == c);
}

TEST_CASE("a proper core: the triangle-shaped cuboid") {
    // cuboid({00, 01, 10}) is ideal and tangled, and the member encoding 00
    // meets the minimum cover {2,4} twice, so it falls out of the core.
    ZeroOneSet s = ZeroOneSet::of(2, {BitVector::from_string("00"), BitVector::from_string("01"),
                                      BitVector::from_string("10")});
    Clutter c = cuboid(s);
    REQUIRE(is_ideal(c).ideal);
    REQUIRE(is_tangled(c));
    Clutter expected = clutter_of(4, {{1, 4}, {2, 3}});
    CHECK(core(c).core == expected);
    CHECK(core_support(c) == expected);
}

TEST_CASE("core of T30 under an idealness assumption") {
    Clutter t = t30();
    CHECK_THROWS_AS(core(t), CapExceeded);  // above the verification caps
    CoreResult r = core(t, /*assume_ideal=*/true);
    CHECK(r.core == t);
    CHECK(r.idealness_assumed);
    // The uniform 1/32 packing has full support, so the LP route keeps all 64.
    CHECK(core_support(t, /*assume_ideal=*/true) == t);
}

TEST_CASE("core rejects unsuitable inputs") {
    CHECK_THROWS_AS(core(clutter_of(2, {{1}})), std::invalid_argument);  // tau = 1
    CHECK_THROWS_AS(core(clutter_of(3, {{1, 2}, {1, 3}, {2, 3}})), std::invalid_argument);  // not ideal
    CHECK_THROWS_AS(core_support(clutter_of(2, {{1}})), std::invalid_argument);
}
