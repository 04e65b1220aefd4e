#ifndef MAGICLAB_SRG_HH
#define MAGICLAB_SRG_HH

#include <magiclab/graph.hh>
#include <magiclab/magic_search.hh>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace magiclab
{
    /// K_n has no non-adjacent pair, so it is carried by order alone.
    struct CompleteGraph
    {
        int n = 0;

        auto operator<=>(const CompleteGraph &) const = default;
    };

    using SrgInput = std::variant<SrgParams, CompleteGraph>;

    /// SRG parameters of g, the complete-graph marker, or absent if g is neither.
    auto srg_input_of(const Graph & g) -> std::optional<SrgInput>;

    auto srg_input_to_string(const SrgInput & in) -> std::string;

    /// Whether H_{n,p} is distance magic. For n, p > 1: n even, or n and p both odd.
    /// The degenerate cases follow directly: H_{n,1} is edgeless (all weights zero, magic)
    /// and H_{1,p} = K_p is magic only for p = 1.
    auto hnp_predicate(int part_size, int parts) -> bool;

    /// Counting identity r(r-a-1) = c(n-r-1) with n >= r+2, 0 <= a < r, 1 <= c <= r, and
    /// both non-principal eigenvalue multiplicities non-negative integers.
    auto srg_feasible(const SrgParams & p) -> bool;

    /// Multiplicities (of the larger root, of the smaller root) when they are integral.
    auto srg_multiplicities(const SrgParams & p) -> std::optional<std::pair<long long, long long>>;

    struct DVerdict
    {
        bool magic = false;
        std::string reason;
    };

    /// Keyed by the distance set string: "1", "2", "0,1", "0,2", "0,1,2".
    struct SrgVerdict
    {
        std::map<std::string, DVerdict> by_d;
    };

    /// The five distance sets an SRG admits, in the order 1; 2; 0,1; 0,2; 0,1,2.
    auto srg_distance_sets() -> std::vector<DistanceSet>;

    /// Throws std::invalid_argument for infeasible parameters.
    auto classify_srg_dmagic(const SrgInput & in) -> SrgVerdict;

    /// 2-r is an eigenvalue: r = 2 with c = 2, or r > 2 with (r-2)(r-c+a-2) = r-c.
    auto eq_ldrg_filter(const SrgParams & p) -> bool;

    /// 1-r is an eigenvalue: (r-1)(c+2-r-a) = c-1.
    auto eq_cdm_filter(const SrgParams & p) -> bool;

    struct LineGraphVerdict
    {
        bool dm = false;
        bool cdm = false;
        std::string dm_reason;
        std::string cdm_reason;
    };

    /// Line graph of a complete or strongly regular graph: distance magic iff the graph is
    /// C_4 (or K_2, K_4 among complete graphs); closed distance magic iff K_3 (or K_2).
    auto classify_srg_linegraph(const SrgInput & in) -> LineGraphVerdict;

    struct Rac
    {
        int r = 0;
        int a = 0;
        int c = 0;

        auto operator<=>(const Rac &) const = default;
    };

    enum class Refutation
    {
        /// Kept: the line graph really is magic.
        magic,
        refuted_by_search,
        /// Too large to search at desk scale; refuted by an external computation.
        refuted_externally,
        /// Search requested but ran out of time.
        indeterminate
    };

    auto refutation_name(Refutation r) -> std::string;

    struct LineGraphCandidate
    {
        std::string name;
        SrgInput params;
        Refutation status = Refutation::magic;
        std::optional<SearchOutcome> search;
    };

    /// The elimination argument for line graphs of SRGs, one branch at a time.
    struct LineGraphPipeline
    {
        /// Open case, c <= 2 branch: (r,a,c) passing the eigenvalue equation, before feasibility.
        std::vector<Rac> bounded_before_feasibility;
        /// Open case, c = r branch and r = 2 branch, and everything feasible afterwards.
        std::vector<LineGraphCandidate> dm_candidates;
        /// Closed case, c = 1 branch before feasibility.
        std::vector<Rac> cdm_before_feasibility;
        std::vector<LineGraphCandidate> cdm_candidates;
    };

    struct PipelineOptions
    {
        int r_max = 6;
        /// Run searches on the candidates' line graphs.
        bool run_searches = true;
        /// Only search line graphs up to this many vertices; larger ones are reported as
        /// refuted externally.
        int desk_scale_vertices = 20;
        SearchConfig search;
    };

    auto linegraph_pipeline(const PipelineOptions & options) -> LineGraphPipeline;

    /// Builds a graph for the parameter sets the pipeline meets: C_4, K_{2,2,2}, rook(3),
    /// Clebsch, Petersen, K_n. Absent for anything else.
    auto realize(const SrgInput & in) -> std::optional<Graph>;
}

#endif
