#include <doctest.h>

#include <clutterkit/cycle_covers.hpp>
#include <clutterkit/io.hpp>
#include <sstream>

#include "helpers.hpp"

using namespace clutterkit;
using testkit::clutter_of;
using testkit::q6;

TEST_CASE("clutter files round trip") {
    std::ostringstream out;
    write_clutter(out, q6());
    std::istringstream in(out.str());
    CHECK(read_clutter(in).clutter == q6());

    std::istringstream commented("# the four triangles of K4\nclutter 6\n1 3 6\n1 4 5\n2 3 5\n2 4 6\n");
    CHECK(read_clutter(commented).clutter == q6());

    std::istringstream with_pairs("clutter 4\npairs 1 2 3 4\n1 3\n2 4\n");
    auto f = read_clutter(with_pairs);
    REQUIRE(f.pairs.has_value());
    CHECK(*f.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});

    std::istringstream degenerate("clutter 3\n-\n");
    CHECK(read_clutter(degenerate).clutter == clutter_of(3, {{}}));
}

TEST_CASE("clutter file errors carry line numbers") {
    std::istringstream bad_header("clotter 6\n");
    CHECK_THROWS_AS(read_clutter(bad_header), ParseError);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_clutter(empty), ParseError);

    std::istringstream bad_token("clutter 3\n1 x\n");
    try {
        read_clutter(bad_token);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    std::istringstream not_antichain("clutter 3\n1\n1 2\n");
    CHECK_THROWS_AS(read_clutter(not_antichain), ParseError);
}

TEST_CASE("graph files round trip") {
    std::ostringstream out;
    write_graph(out, petersen());
    std::istringstream in(out.str());
    Graph g = read_graph(in);
    CHECK(g.vertex_count == 10);
    CHECK(g.edges == petersen().edges);

    std::istringstream bad_count("p 3 2\ne 1 2\n");
    CHECK_THROWS_AS(read_graph(bad_count), ParseError);
    std::istringstream bad_line("p 2 1\nedge 1 2\n");
    CHECK_THROWS_AS(read_graph(bad_line), ParseError);
}

TEST_CASE("matroid files round trip") {
    std::ostringstream out;
    write_matroid(out, fano());
    std::istringstream in(out.str());
    BinaryMatroid m = read_matroid(in);
    CHECK(m == fano());

    std::istringstream bad_width("matroid 3\n0110\n");
    CHECK_THROWS_AS(read_matroid(bad_width), ParseError);
}

TEST_CASE("packing output format") {
    Clutter pair = clutter_of(2, {{1}, {2}});
    auto pk = make_packing(pair, {Rational(1), Rational(1, 2)});
    std::ostringstream out;
    write_packing(out, pair, pk);
    CHECK(out.str() == "packing value 3/2 denominator 2\nmember 1 : 1\nmember 2 : 1/2\n");
}

TEST_CASE("lp emission format") {
    LpProblem p = covering_lp(clutter_of(2, {{1, 2}}), {Rational(1), Rational(1, 3)});
    std::ostringstream out;
    write_lp(out, p);
    CHECK(out.str() == "minimize 1 1/3\n1 1 >= 1\nnonnegative variables\n");
}
