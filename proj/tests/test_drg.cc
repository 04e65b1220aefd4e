#include "test_support.hh"

#include <magiclab/drg.hh>
#include <magiclab/generators.hh>
#include <magiclab/linalg.hh>

#include <doctest.h>

#include <random>

using namespace magiclab;
using namespace magiclab::test;

namespace
{
    const std::vector<long long> table_orders{27, 65, 35, 68, 350, 462, 250, 343, 670, 322, 438, 598, 783};
}

TEST_CASE("vertex counts")
{
    CHECK(vertex_count(IntersectionArray::parse("12,6,2;1,4,9")) == 35);
    CHECK(vertex_count(IntersectionArray::parse("30,22,9;1,3,20")) == 350);
    CHECK(vertex_count(IntersectionArray::parse("7;1")) == 8);
    CHECK(vertex_count(IntersectionArray::parse("10,6,4;1,2,5")) == 65);
    CHECK_THROWS_AS(vertex_count(IntersectionArray::parse("5,4,2;1,3,4")), std::invalid_argument);
}

TEST_CASE("array file parsing")
{
    auto recs = parse_array_file("# comment\n\n6,4,2;1,2,3   # H(3,3)\n{10,6,4;1,2,5}\n");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].array.diameter() == 3);
    CHECK(recs[0].order == 27);
    CHECK(recs[0].line == 3);
    CHECK(recs[1].order == 65);
    CHECK(recs[1].line == 4);

    auto row5 = parse_array_file("30,22,9,1,3,20\n");
    REQUIRE(row5.size() == 1);
    CHECK(row5[0].array.to_string() == "30,22,9;1,3,20");
    CHECK(row5[0].order == 350);

    try {
        parse_array_file("6,4,2;1,2,3\n6,4;1,2,3\n");
        FAIL("expected an error");
    }
    catch (const ArrayParseError & e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_array_file("5,4,2;1,3,4\n"), ArrayParseError);
    CHECK_THROWS_AS(parse_array_file("6,x,2;1,2,3\n"), ArrayParseError);
    CHECK_THROWS_AS(parse_array_file("6,4,2;2,2,3\n"), ArrayParseError);
}

TEST_CASE("bundled table reproduces")
{
    auto recs = parse_array_file(read_text(data_path("diam3_arrays.txt")));
    REQUIRE(recs.size() == 13);
    auto report = diam3_magic_filter(recs);
    REQUIRE(report.surviving.size() == 13);
    for (std::size_t i = 0; i < 13; ++i) {
        CHECK(report.surviving[i].order == table_orders[i]);
        CHECK(report.rows[i].determinant == lemma_det_condition(recs[i].array));
    }
}

TEST_CASE("screen rejections")
{
    auto report = diam3_magic_filter(parse_array_file("3,2,1;1,2,3\n6,4,2;1,2,6\n"));
    REQUIRE(report.rows.size() == 2);
    auto & cube = report.rows[0];
    CHECK(! cube.even_degree);
    CHECK(! cube.primitive);
    CHECK(! cube.determinant);
    CHECK(! report.rows[1].primitive);
    CHECK(report.surviving.empty());

    auto negatives = diam3_magic_filter(parse_array_file(read_text(data_path("negative_arrays.txt"))));
    CHECK(negatives.rows.size() >= 3);
    CHECK(negatives.surviving.empty());

    CHECK_THROWS(diam3_magic_filter(parse_array_file("4,3;1,4\n")));
}

TEST_CASE("determinant test equals the lemma over random arrays")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(1, 24);
    int checked = 0;
    while (checked < 300) {
        IntersectionArray arr{{pick(rng), pick(rng), pick(rng)}, {1, pick(rng), pick(rng)}};
        try {
            arr.validate();
        }
        catch (const std::invalid_argument &) {
            continue;
        }
        ArrayRecord rec;
        rec.array = arr;
        auto report = diam3_magic_filter({rec});
        CHECK(report.rows[0].determinant == lemma_det_condition(arr));
        ++checked;
    }
}

TEST_CASE("cross-check against buildable families")
{
    auto rows = cross_check_known(parse_array_file(read_text(data_path("diam3_arrays.txt"))));
    REQUIRE(rows.size() == 13);
    CHECK(rows[0].family == "hamming:3,3");
    CHECK(rows[0].graph_name == "Hamming graph H(3,3)");
    CHECK(rows[0].order_agrees);
    CHECK(rows[2].family == "johnson:7,3");
    CHECK(rows[2].order_agrees);
    CHECK(! rows[5].family);
    CHECK(rows[5].graph_name == "unknown");

    for (auto & row : rows)
        if (row.family)
            CHECK(has_integer_eigenvalue(generate(*row.family), 0));
}

TEST_CASE("plain-text table")
{
    auto rows = cross_check_known(parse_array_file("6,4,2;1,2,3\n36,25,16;1,4,18\n"));
    auto text = format_table(rows);
    CHECK(text.find("Intersection array") != std::string::npos);
    CHECK(text.find("{6,4,2;1,2,3}") != std::string::npos);
    CHECK(text.find("462") != std::string::npos);
    CHECK(text.find("unknown") != std::string::npos);
}
