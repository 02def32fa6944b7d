#include <doctest.h>

#include <algorithm>
#include <clutterkit/bitvector.hpp>
#include <random>
#include <vector>

using namespace clutterkit;

TEST_CASE("bitvector basics") {
    BitVector v = BitVector::from_string("01101");
    CHECK(v.width() == 5);
    CHECK(v.popcount() == 3);
    CHECK_FALSE(v.get(0));
    CHECK(v.get(1));
    CHECK(v.lowest_set() == 1);
    CHECK(v.to_string() == "01101");
    CHECK(v.support() == std::vector<int>{1, 2, 4});
    CHECK(BitVector(3).zero());
    CHECK(BitVector::ones(3).popcount() == 3);
    CHECK_THROWS_AS(v.get(5), std::out_of_range);
}

TEST_CASE("bitvector algebra") {
    BitVector a = BitVector::from_string("1100");
    BitVector b = BitVector::from_string("0110");
    CHECK((a ^ b).to_string() == "1010");
    CHECK((a & b).to_string() == "0100");
    CHECK((a | b).to_string() == "1110");
    CHECK(a.complement().to_string() == "0011");
    CHECK(a.intersects(b));
    CHECK(BitVector::from_string("0100").subset_of(a));
    CHECK_FALSE(a.subset_of(b));
    CHECK(a.dot(b));  // one shared coordinate
    CHECK_FALSE(a.dot(BitVector::from_string("0011")));
    CHECK_THROWS_AS(a ^ BitVector(3), std::invalid_argument);
}

TEST_CASE("lexicographic order reads coordinates left to right") {
    BitVector a = BitVector::from_string("0011");
    BitVector b = BitVector::from_string("0100");
    CHECK(BitVector::lex_less(a, b));
    CHECK_FALSE(BitVector::lex_less(b, a));
    CHECK_FALSE(BitVector::lex_less(a, a));
    CHECK(BitVector::lex_less(BitVector(4), a));
}

TEST_CASE("set order matches sorted label sequences") {
    auto set_of = [](std::vector<int> labels) {
        std::vector<int> coords;
        for (int l : labels) coords.push_back(l - 1);
        return BitVector::from_support(6, coords);
    };
    CHECK(BitVector::set_less(set_of({1, 2}), set_of({1, 3})));
    CHECK(BitVector::set_less(set_of({1}), set_of({1, 2})));      // prefix first
    CHECK_FALSE(BitVector::set_less(set_of({1, 2}), set_of({1})));
    CHECK(BitVector::set_less(set_of({1, 4, 5}), set_of({2})));
    CHECK(BitVector::set_less(set_of({}), set_of({1})));

    // Cross-check against explicit label-vector comparison on random sets.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        BitVector a(10), b(10);
        for (int i = 0; i < 10; ++i) {
            a.set(i, rng() & 1);
            b.set(i, rng() & 1);
        }
        bool expected = a.support() != b.support() && a.support() < b.support();
        CHECK(BitVector::set_less(a, b) == expected);
    }
}

TEST_CASE("bit width 4096 cap") {
    BitVector big(4096);
    big.set(4095, true);
    CHECK(big.popcount() == 1);
    CHECK_THROWS_AS(BitVector(4097), std::invalid_argument);
}
