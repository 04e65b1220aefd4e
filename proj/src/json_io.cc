#include <magiclab/graph6.hh>
#include <magiclab/json_io.hh>

#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

namespace magiclab
{
    auto graph_to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        return Json{{"n", g.order()}, {"edges", edges}};
    }

    auto graph_from_json(const Json & j) -> Graph
    {
        if (! j.is_object() || ! j.contains("n") || ! j["n"].is_number_integer())
            throw std::invalid_argument("graph JSON needs an integer field \"n\"");
        Graph g(j["n"].get<int>());
        if (j.contains("edges")) {
            if (! j["edges"].is_array())
                throw std::invalid_argument("graph JSON field \"edges\" must be an array");
            for (auto & e : j["edges"]) {
                if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                    throw std::invalid_argument("each edge must be a pair of integers");
                g.add_edge(e[0].get<int>(), e[1].get<int>());
            }
        }
        return g;
    }

    auto read_graph_text(const string & text) -> Graph
    {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != string::npos && text[first] == '{') {
            Json j;
            try {
                j = Json::parse(text);
            }
            catch (const Json::parse_error & e) {
                throw std::invalid_argument(string("bad graph JSON: ") + e.what());
            }
            return graph_from_json(j);
        }
        auto last = text.find_last_not_of(" \t\r\n");
        if (first == string::npos)
            throw std::invalid_argument("empty graph input");
        return parse_graph6(std::string_view(text).substr(first, last - first + 1));
    }

    auto to_json(const SrgParams & p) -> Json
    {
        return Json{{"n", p.n}, {"r", p.r}, {"a", p.a}, {"c", p.c}};
    }

    auto to_json(const IntersectionArray & arr) -> Json
    {
        Json a = Json::array();
        for (int i = 0; i <= arr.diameter(); ++i)
            a.push_back(arr.a_at(i));
        return Json{{"array", arr.to_string()}, {"b", arr.b}, {"c", arr.c}, {"a", a}};
    }

    auto to_json(const QuadraticEigenpair & q) -> Json
    {
        Json j{{"linear", q.linear}, {"constant", q.constant}, {"discriminant", q.discriminant},
            {"integral", q.integral()}};
        if (q.integral())
            j["roots"] = {*q.root_high, *q.root_low};
        else
            j["roots"] = q.to_string();
        return j;
    }

    auto to_json(const SearchOutcome & out) -> Json
    {
        Json j{{"verdict", verdict_name(out.verdict)}};
        j["k"] = out.magic_constant ? Json(*out.magic_constant) : Json(nullptr);
        if (out.labeling)
            j["labeling"] = labeling_to_string(*out.labeling);
        j["nodes"] = out.nodes;
        j["millis"] = out.elapsed.count();
        if (! out.reason.empty())
            j["reason"] = out.reason;
        if (out.pairwise_fallback)
            j["pairwise_fallback"] = true;
        return j;
    }

    auto to_json(const SrgVerdict & v) -> Json
    {
        Json j = Json::object();
        for (auto & d : srg_distance_sets()) {
            auto & entry = v.by_d.at(d.to_string());
            j[d.to_string()] = {{"magic", entry.magic}, {"reason", entry.reason}};
        }
        return j;
    }

    auto to_json(const LineGraphVerdict & v) -> Json
    {
        return Json{{"dm", v.dm}, {"dm_reason", v.dm_reason}, {"cdm", v.cdm}, {"cdm_reason", v.cdm_reason}};
    }

    namespace
    {
        auto record_json(const ArrayRecord & rec) -> Json
        {
            return Json{{"array", rec.array.to_string()}, {"order", rec.order}, {"line", rec.line}};
        }

        auto candidate_json(const LineGraphCandidate & cand) -> Json
        {
            Json j{{"name", cand.name}, {"params", srg_input_to_string(cand.params)},
                {"status", refutation_name(cand.status)}};
            if (cand.search)
                j["search"] = to_json(*cand.search);
            return j;
        }

        auto racs_json(const vector<Rac> & racs) -> Json
        {
            Json j = Json::array();
            for (auto & t : racs)
                j.push_back({t.r, t.a, t.c});
            return j;
        }
    }

    auto to_json(const FilterReport & report) -> Json
    {
        Json rows = Json::array();
        for (auto & row : report.rows) {
            auto j = record_json(row.record);
            j["even_degree"] = row.even_degree;
            j["primitive"] = row.primitive;
            j["determinant"] = row.determinant;
            j["survives"] = row.survives();
            rows.push_back(j);
        }
        Json surviving = Json::array();
        for (auto & rec : report.surviving)
            surviving.push_back(record_json(rec));
        return Json{{"records", rows}, {"surviving_count", report.surviving.size()}, {"surviving", surviving}};
    }

    auto to_json(const vector<CrossCheckRow> & rows) -> Json
    {
        Json j = Json::array();
        for (auto & row : rows) {
            auto r = record_json(row.record);
            r["family"] = row.family ? Json(*row.family) : Json(nullptr);
            r["graph"] = row.graph_name;
            if (row.family)
                r["order_agrees"] = row.order_agrees;
            j.push_back(r);
        }
        return j;
    }

    auto to_json(const LineGraphPipeline & pipeline) -> Json
    {
        Json dm = Json::array(), cdm = Json::array();
        for (auto & cand : pipeline.dm_candidates)
            dm.push_back(candidate_json(cand));
        for (auto & cand : pipeline.cdm_candidates)
            cdm.push_back(candidate_json(cand));
        return Json{{"distance_magic",
                        {{"bounded_before_feasibility", racs_json(pipeline.bounded_before_feasibility)},
                            {"candidates", dm}}},
            {"closed_distance_magic",
                {{"c1_before_feasibility", racs_json(pipeline.cdm_before_feasibility)}, {"candidates", cdm}}}};
    }

    auto info_json(const Graph & g) -> Json
    {
        auto props = basic_properties(g);
        Json j{{"n", g.order()}, {"edges", g.edge_count()}, {"graph6", write_graph6(g)}, {"connected", props.connected}};
        j["regular_degree"] = props.regular_degree ? Json(*props.regular_degree) : Json(nullptr);
        j["diameter"] = props.diameter ? Json(*props.diameter) : Json(nullptr);
        auto srg = srg_parameters(g);
        j["srg"] = srg ? to_json(*srg) : Json(nullptr);
        optional<IntersectionArray> arr;
        if (props.connected && props.regular_degree)
            arr = intersection_array(g);
        j["intersection_array"] = arr ? to_json(*arr) : Json(nullptr);
        return j;
    }

    auto spectral_json(const Graph & g, long long lambda) -> Json
    {
        int mult = eigenvalue_multiplicity(g, lambda);
        return Json{{"lambda", lambda}, {"eigenvalue", mult > 0}, {"multiplicity", mult}};
    }

    auto line_dm_json(const Graph & g) -> Json
    {
        auto props = basic_properties(g);
        if (! props.regular_degree)
            throw std::invalid_argument("the line-graph test needs a regular graph");
        int r = *props.regular_degree;
        bool k2 = g.order() == 2 && r == 1;
        auto j = spectral_json(g, 2 - r);
        Json out{{"test", "line-dm"}, {"r", r}, {"is_K2", k2}};
        out.update(j);
        out["necessary_condition_holds"] = k2 || j["eigenvalue"].get<bool>();
        return out;
    }

    auto verify_json(const Graph & g, const DistanceSet & d, const Labeling & f) -> Json
    {
        auto k = verify_labeling(g, d, f);
        return Json{{"magic", k.has_value()}, {"k", k ? Json(*k) : Json(nullptr)}};
    }

    auto classify_json(const SrgInput & in) -> Json
    {
        Json j{{"input", srg_input_to_string(in)}};
        if (auto p = std::get_if<SrgParams>(&in)) {
            j["params"] = to_json(*p);
            bool feasible = srg_feasible(*p);
            j["feasible"] = feasible;
            if (! feasible)
                return j;
            j["eigenvalues"] = to_json(srg_eigen(*p));
            auto mult = *srg_multiplicities(*p);
            j["multiplicities"] = {mult.first, mult.second};
            j["line_graph_filters"] = {{"two_minus_r", eq_ldrg_filter(*p)}, {"one_minus_r", eq_cdm_filter(*p)}};
        }
        j["d_magic"] = to_json(classify_srg_dmagic(in));
        if (auto k = std::get_if<CompleteGraph>(&in); ! k || k->n >= 2)
            j["line_graph"] = to_json(classify_srg_linegraph(in));
        return j;
    }
}
