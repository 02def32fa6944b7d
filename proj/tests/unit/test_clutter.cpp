#include <doctest.h>

#include <clutterkit/clutter.hpp>

#include "helpers.hpp"

using namespace clutterkit;
using testkit::blocker_bruteforce;
using testkit::clutter_of;
using testkit::q6;

TEST_CASE("clutter construction validates the antichain") {
    Clutter c = q6();
    CHECK(c.ground_size() == 6);
    CHECK(c.member_count() == 4);
    CHECK_THROWS_WITH_AS(clutter_of(3, {{1, 2}, {1, 2, 3}}), doctest::Contains("contained in"),
                         std::invalid_argument);
    CHECK_THROWS_AS(clutter_of(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(clutter_of(2, {{3}}), std::invalid_argument);
    CHECK(clutter_of(2, {}).member_count() == 0);
    CHECK(clutter_of(0, {}).ground_size() == 0);
}

TEST_CASE("blocker of Q6 adds the three coordinate pairs") {
    Clutter b = blocker(q6());
    Clutter expected =
        clutter_of(6, {{1, 2}, {3, 4}, {5, 6}, {1, 3, 6}, {1, 4, 5}, {2, 3, 5}, {2, 4, 6}});
    CHECK(b == expected);
    CHECK(b == blocker_bruteforce(q6()));
    CHECK(blocker(b) == q6());

    CHECK(blocker(clutter_of(1, {{1}})) == clutter_of(1, {{1}}));
}

TEST_CASE("blocker degenerate conventions") {
    Clutter none = clutter_of(3, {});
    Clutter empty_member = clutter_of(3, {{}});
    CHECK(blocker(none) == empty_member);
    CHECK(blocker(empty_member) == none);
    CHECK(covering_number(none) == 0);
    CHECK_FALSE(covering_number(empty_member).has_value());  // +infinity
}

TEST_CASE("covering and packing numbers") {
    CHECK(covering_number(q6()) == 2);
    CHECK(packing_number(q6()) == 1);
    CHECK(packing_number(clutter_of(2, {{1}, {2}})) == 2);
    CHECK(packing_number(clutter_of(4, {{1, 2}, {3, 4}, {1, 3}})) == 2);
    CHECK(covering_number(clutter_of(4, {{1, 2}, {3, 4}, {1, 3}})) == 2);
    CHECK_THROWS_AS(packing_number(clutter_of(2, {{}})), std::invalid_argument);
}

TEST_CASE("minors") {
    auto del = minor(q6(), {1}, {});
    CHECK(del.clutter == clutter_of(5, {{1, 2, 4}, {1, 3, 5}}));  // {2,3,5},{2,4,6} relabeled
    CHECK(del.to_parent == std::vector<int>{2, 3, 4, 5, 6});

    auto con = minor(q6(), {}, {1});
    CHECK(con.clutter == clutter_of(5, {{2, 5}, {3, 4}, {1, 2, 4}, {1, 3, 5}}));
    CHECK(con.to_parent == std::vector<int>{2, 3, 4, 5, 6});

    auto same = minor(q6(), {}, {});
    CHECK(same.clutter == q6());
    CHECK_THROWS_AS(minor(q6(), {1}, {1}), std::invalid_argument);
}

TEST_CASE("duplication and deduplication") {
    Clutter two = clutter_of(2, {{1}, {2}});
    Clutter dup = duplicate(two, 1);
    CHECK(dup == clutter_of(3, {{1, 3}, {2}}));

    auto dd = deduplicate(dup);
    CHECK(dd.clutter == two);
    CHECK(dd.classes == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK_THROWS_AS(duplicate(two, 5), std::invalid_argument);

    // Duplicating then deduplicating a duplicate-free clutter is the identity.
    auto round = deduplicate(duplicate(q6(), 3));
    CHECK(round.clutter == q6());
}

TEST_CASE("k-wise intersecting") {
    CHECK(is_k_wise_intersecting(q6(), 2));
    CHECK_FALSE(is_k_wise_intersecting(q6(), 3));  // {1,3,6},{1,4,5},{2,3,5} miss
    CHECK_FALSE(is_k_wise_intersecting(clutter_of(2, {{1}, {2}}), 2));
    CHECK_FALSE(is_k_wise_intersecting(clutter_of(2, {{1, 2}}), 2));  // common element
    CHECK(is_k_wise_intersecting(q6(), 1));  // members nonempty, no common element
    CHECK_THROWS_AS(is_k_wise_intersecting(q6(), 0), std::invalid_argument);
}

TEST_CASE("binary test by triples") {
    CHECK(is_binary(q6()));
    CHECK_FALSE(is_binary(clutter_of(3, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK(is_binary(clutter_of(1, {{1}})));
    CHECK(is_binary(clutter_of(2, {})));
}

TEST_CASE("tangled") {
    CHECK(is_tangled(q6()));
    // Element 4 lies in no minimum cover.
    CHECK_FALSE(is_tangled(clutter_of(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}})));
    // tau = 2 and the unique minimum cover {1,2} touches every element.
    CHECK(is_tangled(clutter_of(2, {{1}, {2}})));
    // tau = 1 is never tangled.
    CHECK_FALSE(is_tangled(clutter_of(2, {{1}})));
}

TEST_CASE("minimum covers") {
    auto covers = minimum_covers(q6());
    CHECK(covers.size() == 3);
    CHECK(Clutter::from_incidence(6, covers) == clutter_of(6, {{1, 2}, {3, 4}, {5, 6}}));
}

TEST_CASE("chromatic number") {
    Clutter c = q6();
    auto chi_q6 = chromatic_number(c);
    CHECK(chi_q6.chi == 2);
    // The witness is a proper colouring.
    BitVector seen(6);
    for (const auto& part : chi_q6.witness.parts) {
        BitVector mask(6);
        for (int v : part) mask.set(v - 1, true);
        seen |= mask;
        for (const auto& m : c.members()) CHECK_FALSE(m.subset_of(mask));
    }
    CHECK(seen == BitVector::ones(6));

    CHECK(chromatic_number(blocker(q6())).chi == 3);
    CHECK(chromatic_number(clutter_of(2, {{1, 2}})).chi == 2);
    CHECK_THROWS_AS(chromatic_number(clutter_of(2, {{1}})), std::invalid_argument);
}

TEST_CASE("core members of Q6") {
    CHECK(core_members(q6()) == q6());
    CHECK_THROWS_AS(core_members(clutter_of(2, {{1}})), std::invalid_argument);
}

TEST_CASE("minimal tangled deletion minor") {
    auto fixed = minimal_tangled_deletion_minor(q6());
    CHECK(fixed.clutter == q6());
    CHECK(fixed.deleted.empty());

    auto shrunk = minimal_tangled_deletion_minor(clutter_of(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}}));
    CHECK(shrunk.deleted == std::vector<int>{4});
    CHECK(shrunk.clutter == clutter_of(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(is_tangled(shrunk.clutter));

    CHECK_THROWS_AS(minimal_tangled_deletion_minor(clutter_of(2, {{1}})), std::invalid_argument);
}

TEST_CASE("element signatures") {
    Clutter c = q6();
    CHECK(c.element_signature(1).popcount() == 2);
    CHECK_THROWS_AS(c.element_signature(7), std::invalid_argument);
}
