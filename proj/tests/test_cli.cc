#include "test_support.hh"

#include <cli.hh>

#include <magiclab/drg.hh>
#include <magiclab/generators.hh>
#include <magiclab/graph6.hh>
#include <magiclab/json_io.hh>

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace magiclab;
using namespace magiclab::test;

namespace
{
    struct Result
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(const std::vector<std::string> & args) -> Result
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto without_millis(std::string text) -> Json
    {
        auto j = Json::parse(text);
        j.erase("millis");
        return j;
    }
}

TEST_CASE("search examples")
{
    auto r = run({"search", "--graph6", "C~", "--d", "0,1"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["verdict"] == "found");
    CHECK(j["k"] == 10);

    auto none = run({"search", "--family", "cycle:6"});
    CHECK(none.code == 0);
    CHECK(Json::parse(none.out)["verdict"] == "not_magic");

    auto naive = run({"search", "--family", "complete_multipartite:2,3", "--algo", "naive"});
    CHECK(Json::parse(naive.out)["k"] == 14);
}

TEST_CASE("indeterminate exits with 3")
{
    auto r = run({"search", "--family", "rook:3", "--timeout", "0.001"});
    CHECK(r.code == 0);
    auto lg = write_graph6(line_graph(rook(3)));
    auto t = run({"search", "--graph6", lg, "--timeout", "0.001", "--threads", "2"});
    CHECK(t.code == 3);
    CHECK(Json::parse(t.out)["verdict"] == "indeterminate");
}

TEST_CASE("filter and cross-check")
{
    auto r = run({"filter-arrays", data_path("diam3_arrays.txt")});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["surviving_count"] == 13);

    auto pretty = run({"filter-arrays", data_path("diam3_arrays.txt"), "--pretty"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("13 of 13 arrays survive") != std::string::npos);
    CHECK(pretty.out.find("Hamming graph H(3,3)") != std::string::npos);

    auto neg = run({"filter-arrays", data_path("negative_arrays.txt")});
    CHECK(Json::parse(neg.out)["surviving_count"] == 0);

    auto cross = run({"cross-check", data_path("diam3_arrays.txt")});
    CHECK(Json::parse(cross.out)[2]["family"] == "johnson:7,3");
}

TEST_CASE("spectral")
{
    auto r = run({"spectral", "--family", "hamming:3,3", "--lambda", "0"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["eigenvalue"] == true);
    CHECK(Json::parse(run({"spectral", "--family", "complete:4", "--test", "minus-one"}).out)["eigenvalue"] == true);
    CHECK(Json::parse(run({"spectral", "--family", "cycle:3", "--test", "zero"}).out)["eigenvalue"] == false);
    CHECK(run({"spectral", "--family", "cycle:3", "--test", "zero", "--lambda", "1"}).code == 2);
    CHECK(run({"spectral", "--family", "cycle:3"}).code == 2);
}

TEST_CASE("verify, info, generate, classify")
{
    auto v = run({"verify", "--family", "cycle:4", "--labels", "1,2,4,3"});
    CHECK(Json::parse(v.out)["k"] == 5);
    CHECK(run({"verify", "--family", "cycle:4", "--labels", "1,2,2,3"}).code == 2);

    auto g = run({"generate", "complete:4", "--format", "graph6"});
    CHECK(g.out == "C~\n");

    auto info = run({"info", "--graph6", "C~"});
    CHECK(Json::parse(info.out)["edges"] == 6);

    auto c = run({"classify-srg", "--params", "6,4,2,4"});
    CHECK(Json::parse(c.out)["d_magic"]["1"]["magic"] == true);
    auto cg = run({"classify-srg", "--family", "complete:5"});
    CHECK(Json::parse(cg.out)["input"] == "K_5");
    CHECK(run({"classify-srg", "--family", "cycle:6"}).code == 2);
    CHECK(run({"classify-srg", "--params", "9,4,1,2", "--family", "rook:3"}).code == 2);
}

TEST_CASE("input errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"search"}).code == 2);
    CHECK(run({"search", "--graph6", "C~", "--family", "cycle:4"}).code == 2);
    CHECK(run({"search", "--graph6", "C~~"}).code == 2);
    CHECK(run({"search", "--file", "/nonexistent/graph.g6"}).code == 2);
    CHECK(run({"search", "--graph6", "C~", "--algo", "fast"}).code == 2);
    CHECK(run({"filter-arrays", "/nonexistent/arrays.txt"}).code == 2);
    auto bad = run({"search", "--graph6", "C~~"});
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("file input accepts graph6 and JSON")
{
    auto path = std::string(MAGICLAB_TEST_BINARY_DIR) + "/rook3.json";
    {
        std::ofstream f(path);
        f << graph_to_json(rook(3)).dump();
    }
    auto r = run({"info", "--file", path});
    CHECK(Json::parse(r.out)["srg"] == Json{{"n", 9}, {"r", 4}, {"a", 1}, {"c", 2}});
}

TEST_CASE("CLI output is byte-identical to the library's JSON")
{
    auto g = complete_multipartite(2, 3);
    SearchConfig cfg;
    auto api = to_json(search(g, cfg));
    api.erase("millis");
    CHECK(without_millis(run({"search", "--family", "complete_multipartite:2,3"}).out).dump() == api.dump());

    CHECK(run({"info", "--family", "clebsch"}).out == info_json(clebsch()).dump() + "\n");
    CHECK(run({"spectral", "--family", "rook:3", "--lambda", "-2"}).out == spectral_json(rook(3), -2).dump() + "\n");
    CHECK(run({"verify", "--family", "cycle:4", "--labels", "1,2,4,3"}).out
        == verify_json(cycle(4), DistanceSet{1}, {1, 2, 4, 3}).dump() + "\n");
    CHECK(run({"classify-srg", "--params", "16,5,0,2"}).out == classify_json(SrgParams{16, 5, 0, 2}).dump() + "\n");
    CHECK(run({"generate", "hamming:2,3"}).out == graph_to_json(hamming(2, 3)).dump() + "\n");

    auto text = read_text(data_path("diam3_arrays.txt"));
    CHECK(run({"filter-arrays", data_path("diam3_arrays.txt")}).out
        == to_json(diam3_magic_filter(parse_array_file(text))).dump() + "\n");
    CHECK(run({"cross-check", data_path("diam3_arrays.txt")}).out
        == to_json(cross_check_known(parse_array_file(text))).dump() + "\n");
}

TEST_CASE("pretty output")
{
    auto r = run({"--pretty", "info", "--family", "rook:3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("srg") != std::string::npos);
    CHECK(r.out.find(" \n") == std::string::npos);
    auto after = run({"info", "--family", "rook:3", "--pretty"});
    CHECK(after.out == r.out);
    auto nested = run({"classify-srg", "--params", "9,4,1,2", "--pretty"});
    CHECK(nested.out.find(" \n") == std::string::npos);
    CHECK(nested.out.find("0,1,2") != std::string::npos);
}

TEST_CASE("line-graph pipeline subcommand")
{
    auto r = run({"srg-linegraph", "--no-search"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["distance_magic"]["candidates"].size() == 4);
    CHECK(j["closed_distance_magic"]["candidates"].size() == 2);
}
