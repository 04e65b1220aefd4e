#ifndef MAGICLAB_JSON_IO_HH
#define MAGICLAB_JSON_IO_HH

#include <magiclab/distance.hh>
#include <magiclab/drg.hh>
#include <magiclab/graph.hh>
#include <magiclab/linalg.hh>
#include <magiclab/magic_search.hh>
#include <magiclab/srg.hh>

#include <json.hpp>

#include <string>

namespace magiclab
{
    using Json = nlohmann::ordered_json;

    /// {"n": int, "edges": [[u,v], ...]}
    auto graph_to_json(const Graph & g) -> Json;
    auto graph_from_json(const Json & j) -> Graph;

    /// JSON if the first non-blank character is '{', graph6 otherwise.
    auto read_graph_text(const std::string & text) -> Graph;

    auto to_json(const SrgParams & p) -> Json;
    auto to_json(const IntersectionArray & arr) -> Json;
    auto to_json(const QuadraticEigenpair & q) -> Json;
    auto to_json(const SearchOutcome & out) -> Json;
    auto to_json(const SrgVerdict & v) -> Json;
    auto to_json(const LineGraphVerdict & v) -> Json;
    auto to_json(const FilterReport & report) -> Json;
    auto to_json(const std::vector<CrossCheckRow> & rows) -> Json;
    auto to_json(const LineGraphPipeline & pipeline) -> Json;

    /// Structural summary: order, edges, graph6, connectivity, degree, diameter, SRG
    /// parameters and intersection array when present.
    auto info_json(const Graph & g) -> Json;

    /// {"lambda", "eigenvalue", "multiplicity"}.
    auto spectral_json(const Graph & g, long long lambda) -> Json;

    /// The 2-r test for line graphs of r-regular graphs; K_2 is reported separately.
    auto line_dm_json(const Graph & g) -> Json;

    /// {"magic": bool, "k": int|null}.
    auto verify_json(const Graph & g, const DistanceSet & d, const Labeling & f) -> Json;

    /// Feasibility, eigenvalues, D-magic verdicts and line-graph verdicts for one SRG input.
    auto classify_json(const SrgInput & in) -> Json;
}

#endif
