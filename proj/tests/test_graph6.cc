#include "test_support.hh"

#include <magiclab/generators.hh>
#include <magiclab/graph6.hh>

#include <doctest.h>

using namespace magiclab;
using namespace magiclab::test;

TEST_CASE("short form")
{
    auto k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete(4));
    CHECK(write_graph6(complete(4)) == "C~");

    auto one = parse_graph6("@");
    CHECK(one.order() == 1);
    CHECK(write_graph6(Graph(1)) == "@");
}

TEST_CASE("header and newline")
{
    CHECK(parse_graph6(">>graph6<<C~") == complete(4));
    CHECK(parse_graph6("C~\n") == complete(4));
    CHECK_THROWS_AS(parse_graph6("C~\n\n"), Graph6Error);
}

TEST_CASE("format errors carry offsets")
{
    try {
        parse_graph6("C~~");
        FAIL("expected an error");
    }
    catch (const Graph6Error & e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C\x7f"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C "), Graph6Error);
    // n = 2 has one edge bit; the other five must be zero.
    CHECK(parse_graph6("A_").edge_count() == 1);
    CHECK_THROWS_AS(parse_graph6("A`"), Graph6Error);
}

TEST_CASE("extended lengths")
{
    auto big = cycle(100);
    auto text = write_graph6(big);
    CHECK(text.substr(0, 4) == "~?@c");
    CHECK(parse_graph6(text) == big);

    auto c63 = cycle(63);
    CHECK(write_graph6(c63)[0] == '~');
    CHECK(parse_graph6(write_graph6(c63)) == c63);
    CHECK(write_graph6(cycle(62))[0] == char(62 + 63));

    // 258048 = 2^18 - 4096 needs the eight-byte form; only the header is checked.
    CHECK_THROWS_AS(parse_graph6("~~?"), Graph6Error);
}

TEST_CASE("round trip over the corpus and generated families")
{
    for (auto & [g6, g] : regular_corpus()) {
        CHECK(write_graph6(g) == g6);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    for (auto g : {hamming(3, 3), johnson(7, 3), clebsch(), rook(4), complete_multipartite(3, 3)})
        CHECK(parse_graph6(write_graph6(g)) == g);
}
