#include "test_support.hh"

#include <magiclab/generators.hh>
#include <magiclab/linalg.hh>
#include <magiclab/srg.hh>

#include <doctest.h>

using namespace magiclab;
using namespace magiclab::test;

namespace
{
    auto search_verdict(const Graph & g, const DistanceSet & d) -> bool
    {
        SearchConfig cfg;
        cfg.d = d;
        auto out = search(g, cfg);
        REQUIRE(out.verdict != Verdict::indeterminate);
        return out.verdict == Verdict::found;
    }

    auto names(const std::vector<LineGraphCandidate> & list) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (auto & c : list)
            result.push_back(c.name);
        return result;
    }
}

TEST_CASE("complete multipartite predicate")
{
    CHECK(hnp_predicate(2, 3));
    CHECK(hnp_predicate(3, 3));
    CHECK(! hnp_predicate(3, 2));
    CHECK(! hnp_predicate(1, 2));
    CHECK(hnp_predicate(1, 1));
    CHECK(hnp_predicate(5, 1));
    CHECK_THROWS(hnp_predicate(0, 2));
}

TEST_CASE("feasibility")
{
    CHECK(srg_feasible({9, 4, 1, 2}));
    CHECK(srg_feasible({16, 5, 0, 2}));
    CHECK(srg_feasible({5, 2, 0, 1}));
    CHECK(srg_feasible({10, 3, 0, 1}));
    for (int n = 1; n <= 40; ++n)
        CHECK(! srg_feasible({n, 2, 1, 1}));
    CHECK(! srg_feasible({4, 3, 2, 2}));
    // 3*2 = 2*(7-3-1) holds, but the eigenvalues are irrational with unequal multiplicities.
    CHECK(! srg_feasible({7, 3, 0, 2}));
    auto m = srg_multiplicities({9, 4, 1, 2});
    REQUIRE(m);
    CHECK(m->first == 4);
    CHECK(m->second == 4);
}

TEST_CASE("D-magic verdicts from parameters")
{
    auto rook = classify_srg_dmagic(SrgParams{9, 4, 1, 2});
    for (auto & [d, v] : rook.by_d)
        CHECK(v.magic == (d == "0,1,2"));

    auto h = classify_srg_dmagic(SrgParams{6, 4, 2, 4});
    CHECK(h.by_d["1"].magic);
    CHECK(h.by_d["0,2"].magic);
    CHECK(! h.by_d["0,1"].magic);
    CHECK(! h.by_d["2"].magic);
    CHECK(h.by_d["0,1,2"].magic);

    auto k = classify_srg_dmagic(CompleteGraph{5});
    CHECK(! k.by_d["1"].magic);
    CHECK(! k.by_d["0,2"].magic);
    CHECK(k.by_d["0,1"].magic);
    CHECK(k.by_d["2"].magic);
    CHECK(k.by_d["0,1,2"].magic);

    CHECK(! classify_srg_dmagic(SrgParams{6, 3, 0, 3}).by_d["1"].magic);
    CHECK_THROWS(classify_srg_dmagic(SrgParams{7, 2, 1, 1}));

    for (auto p : {SrgParams{9, 4, 1, 2}, SrgParams{6, 4, 2, 4}, SrgParams{5, 2, 0, 1}, SrgParams{8, 4, 0, 4}}) {
        auto v = classify_srg_dmagic(p);
        CHECK(v.by_d["1"].magic == v.by_d["0,2"].magic);
        CHECK(v.by_d["2"].magic == v.by_d["0,1"].magic);
    }
}

TEST_CASE("classification matches search on small realizations")
{
    std::vector<Graph> graphs{cycle(5), rook(3), complement(line_graph(complete(5)))};
    for (int n = 1; n <= 6; ++n)
        for (int p = 1; n * p <= 12; ++p)
            graphs.push_back(complete_multipartite(n, p));
    for (auto & g : graphs) {
        auto in = srg_input_of(g);
        if (! in)
            continue;
        CAPTURE(srg_input_to_string(*in));
        auto v = classify_srg_dmagic(*in);
        for (auto & d : srg_distance_sets())
            CHECK(v.by_d[d.to_string()].magic == search_verdict(g, d));
    }
}

TEST_CASE("line-graph equations")
{
    CHECK(eq_ldrg_filter({9, 4, 1, 2}));
    CHECK(eq_ldrg_filter({16, 5, 0, 2}));
    CHECK(! eq_ldrg_filter({15, 6, 1, 3}));
    CHECK(eq_ldrg_filter({4, 2, 0, 2}));
    CHECK(! eq_ldrg_filter({5, 2, 0, 1}));

    CHECK(eq_cdm_filter({0, 2, 1, 1}));
    for (int r = 2; r <= 10; ++r)
        CHECK(eq_cdm_filter({0, r, 1, r}));
    CHECK(! eq_cdm_filter({9, 4, 1, 2}));

    std::vector<Graph> graphs{cycle(4), cycle(5), rook(3), clebsch(), complement(line_graph(complete(5))),
        johnson(5, 2), johnson(6, 2), complete_multipartite(2, 3), complete_multipartite(3, 3)};
    for (auto & g : graphs) {
        auto p = srg_parameters(g);
        REQUIRE(p);
        CAPTURE(p->to_string());
        CHECK(eq_ldrg_filter(*p) == has_integer_eigenvalue(g, 2 - p->r));
        CHECK(eq_cdm_filter(*p) == has_integer_eigenvalue(g, 1 - p->r));
    }
}

TEST_CASE("line-graph verdicts")
{
    CHECK(classify_srg_linegraph(SrgParams{4, 2, 0, 2}).dm);
    CHECK(classify_srg_linegraph(CompleteGraph{3}).cdm);
    CHECK(! classify_srg_linegraph(CompleteGraph{3}).dm);
    CHECK(! classify_srg_linegraph(SrgParams{16, 5, 0, 2}).dm);
    CHECK(! classify_srg_linegraph(SrgParams{10, 3, 0, 1}).cdm);
    CHECK(classify_srg_linegraph(CompleteGraph{4}).dm);
    CHECK_THROWS(classify_srg_linegraph(CompleteGraph{1}));
}

TEST_CASE("line-graph elimination pipeline")
{
    PipelineOptions options;
    auto result = linegraph_pipeline(options);

    CHECK(result.bounded_before_feasibility == std::vector<Rac>{{3, 2, 1}, {3, 2, 2}, {4, 1, 2}, {5, 0, 2}});
    CHECK(names(result.dm_candidates) == std::vector<std::string>{"C_4", "3x3 rook graph", "K_{2,2,2}", "Clebsch graph"});
    CHECK(result.cdm_before_feasibility == std::vector<Rac>{{2, 1, 1}, {3, 0, 1}});
    CHECK(names(result.cdm_candidates) == std::vector<std::string>{"K_3", "Petersen graph"});

    REQUIRE(result.dm_candidates.size() == 4);
    CHECK(result.dm_candidates[0].status == Refutation::magic);
    CHECK(result.dm_candidates[1].status == Refutation::refuted_by_search);
    CHECK(result.dm_candidates[2].status == Refutation::refuted_by_search);
    CHECK(result.dm_candidates[3].status == Refutation::refuted_externally);
    REQUIRE(result.cdm_candidates.size() == 2);
    CHECK(result.cdm_candidates[0].status == Refutation::magic);
    CHECK(result.cdm_candidates[1].status == Refutation::refuted_by_search);

    options.run_searches = false;
    for (auto & c : linegraph_pipeline(options).dm_candidates)
        CHECK(c.status == Refutation::indeterminate);
}

TEST_CASE("realizations")
{
    CHECK(srg_parameters(*realize(SrgParams{10, 3, 0, 1})) == SrgParams{10, 3, 0, 1});
    CHECK(srg_parameters(*realize(SrgParams{6, 4, 2, 4})) == SrgParams{6, 4, 2, 4});
    CHECK(srg_parameters(*realize(SrgParams{16, 5, 0, 2})) == SrgParams{16, 5, 0, 2});
    CHECK(! realize(SrgParams{5, 2, 0, 1}));
    CHECK(*realize(CompleteGraph{3}) == complete(3));
}
