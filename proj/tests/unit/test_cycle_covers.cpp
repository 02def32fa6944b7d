#include <doctest.h>

#include <clutterkit/cycle_covers.hpp>

using namespace clutterkit;

TEST_CASE("cycle spaces bridges and cuts") {
    Graph triangle = complete_graph(3);
    BinarySpace ts = cycle_space(triangle);
    CHECK(ts.rank() == 1);
    CHECK(ts.contains(BitVector::ones(3)));
    CHECK(bridges(triangle).empty());

    Graph path = Graph::of(3, {{1, 2}, {2, 3}});
    CHECK(bridges(path) == std::vector<int>{1, 2});
    CHECK(cycle_space(path).rank() == 0);

    Graph pete = petersen();
    CHECK(pete.vertex_count == 10);
    CHECK(pete.edge_count() == 15);
    CHECK(cycle_space(pete).rank() == 6);
    CHECK(bridges(pete).empty());
    // Girth five: no nonzero cycle has fewer than five edges.
    int shortest = 15;
    for (const auto& p : cycle_space(pete).enumerate_points())
        if (!p.zero()) shortest = std::min(shortest, p.popcount());
    CHECK(shortest == 5);

    CHECK(cut(triangle, {1}).support() == std::vector<int>{0, 1});
    CHECK(cut(triangle, {1, 2, 3}).zero());
    Graph loopy = Graph::of(2, {{1, 1}, {1, 2}});
    CHECK(cut(loopy, {1}).support() == std::vector<int>{1});  // loops never cut
}

TEST_CASE("k-cycle covers of the Petersen graph") {
    Graph pete = petersen();
    CHECK_FALSE(k_cycle_cover(pete, 2).has_value());

    auto three = k_cycle_cover(pete, 3);
    REQUIRE(three.has_value());
    BitVector covered(15);
    for (const auto& c : *three) {
        CHECK(is_graph_cycle(pete, c));
        covered |= c;
    }
    CHECK(covered == BitVector::ones(15));
}

TEST_CASE("k-cycle cover edge cases") {
    Graph bridge = Graph::of(3, {{1, 2}, {2, 3}, {1, 2}});
    CHECK_FALSE(k_cycle_cover(bridge, 1).has_value());
    CHECK_FALSE(k_cycle_cover(bridge, 3).has_value());

    Graph triangle = complete_graph(3);
    auto one = k_cycle_cover(triangle, 1);
    REQUIRE(one.has_value());
    CHECK((*one)[0] == BitVector::ones(3));

    CHECK_THROWS_AS(k_cycle_cover(triangle, 0), std::invalid_argument);
}

TEST_CASE("seven cycles covering every edge four times") {
    for (const Graph& g : {petersen(), complete_graph(4), complete_graph(5), complete_bipartite(3, 3),
                           triangular_prism(), bowtie()}) {
        CycleCover cover = seven_cycle_four_cover(g);
        CHECK(cover.cycles.size() == 7);
        CHECK(verify_cycle_cover(g, cover, 4));
    }

    // A single loop is a bridgeless graph.
    Graph loop = Graph::of(1, {{1, 1}});
    CycleCover cover = seven_cycle_four_cover(loop);
    CHECK(verify_cycle_cover(loop, cover, 4));

    Graph bridged = Graph::of(3, {{1, 2}, {2, 3}, {1, 2}});
    CHECK_THROWS_WITH_AS(seven_cycle_four_cover(bridged), doctest::Contains("edge 2"),
                         std::invalid_argument);
}

TEST_CASE("the cuboid of the Petersen cycle space") {
    Clutter t = t30();
    CHECK(t.ground_size() == 30);
    CHECK(t.member_count() == 64);
    CHECK(is_binary(t));
    CHECK(is_tangled(t));
    CHECK(covering_number(t) == 2);
    CHECK(packing_number(t) == 1);
}
