#include "test_support.hh"

#include <magiclab/generators.hh>

#include <doctest.h>

#include <stdexcept>

using namespace magiclab;
using namespace magiclab::test;

TEST_CASE("hamming")
{
    auto h = hamming(3, 3);
    CHECK(h.order() == 27);
    auto p = basic_properties(h);
    CHECK(p.regular_degree == 6);
    CHECK(p.diameter == 3);
    // 000 ~ 001, 000 !~ 011
    CHECK(h.adjacent(0, 1));
    CHECK(! h.adjacent(0, 4));
    CHECK(srg_parameters(hamming(2, 2)) == SrgParams{4, 2, 0, 2});
}

TEST_CASE("johnson uses colex order")
{
    auto j = johnson(5, 2);
    CHECK(j.order() == 10);
    // colex: {0,1} {0,2} {1,2} {0,3} ...
    CHECK(j.adjacent(0, 1));
    CHECK(j.adjacent(1, 2));
    CHECK(! j.adjacent(2, 3));
    CHECK(srg_parameters(j) == SrgParams{10, 6, 3, 4});
    CHECK(johnson(7, 3).order() == 35);
    CHECK_THROWS(johnson(3, 4));
}

TEST_CASE("complete multipartite")
{
    CHECK(complete_multipartite(1, 5) == complete(5));
    auto g = complete_multipartite(2, 3);
    CHECK(! g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(g.edge_count() == 12);
}

TEST_CASE("rook and clebsch")
{
    CHECK(srg_parameters(rook(3)) == SrgParams{9, 4, 1, 2});
    CHECK(rook(3).adjacent(0, 2));
    CHECK(rook(3).adjacent(0, 6));
    CHECK(! rook(3).adjacent(0, 4));
    auto c = clebsch();
    CHECK(c.order() == 16);
    CHECK(srg_parameters(c) == SrgParams{16, 5, 0, 2});
    CHECK(c.adjacent(0, 15));
    CHECK(! c.adjacent(0, 3));
}

TEST_CASE("cycles and complete graphs")
{
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS(cycle(2));
    CHECK(complete(1).order() == 1);
    CHECK(complete(6).edge_count() == 15);
}

TEST_CASE("dispatch by name")
{
    CHECK(generate("hamming:3,3") == hamming(3, 3));
    CHECK(generate("johnson", {7, 3}) == johnson(7, 3));
    CHECK(generate("clebsch") == clebsch());
    CHECK(generate("complete_multipartite:2,3") == complete_multipartite(2, 3));
    CHECK(generate("rook:3") == rook(3));
    CHECK(generate("cycle:4") == cycle(4));
    CHECK(generate("complete:3") == complete(3));
    CHECK_THROWS_AS(generate("petersen"), std::invalid_argument);
    CHECK_THROWS_AS(generate("hamming:3"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle:x"), std::invalid_argument);
}
