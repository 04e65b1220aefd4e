#ifndef MAGICLAB_MAGIC_SEARCH_HH
#define MAGICLAB_MAGIC_SEARCH_HH

#include <magiclab/distance.hh>
#include <magiclab/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace magiclab
{
    /// labels[v] is the label of vertex v, a permutation of 1..n.
    using Labeling = std::vector<int>;

    enum class NeighbourhoodMode
    {
        open,
        closed
    };

    /// r(n+1)/2 (open) or (r+1)(n+1)/2 (closed), when integral.
    auto magic_constant(long long n, long long r, NeighbourhoodMode mode) -> std::optional<long long>;

    /// Open: r even. Closed: n + r odd.
    auto parity_precheck(long long n, long long r, NeighbourhoodMode mode) -> bool;

    /// The common D-weight, or absent if the weights differ. Works for any graph. Throws
    /// std::invalid_argument if f is not a bijection onto 1..n.
    auto verify_labeling(const Graph & g, const DistanceSet & d, const Labeling & f) -> std::optional<long long>;

    /// "1,2,4,3" and back.
    auto labeling_to_string(const Labeling & f) -> std::string;
    auto parse_labeling(const std::string & text) -> Labeling;

    enum class SearchAlgorithm
    {
        naive,
        backtrack
    };

    struct SearchConfig
    {
        SearchAlgorithm algorithm = SearchAlgorithm::backtrack;
        DistanceSet d{1};
        /// Zero means no limit.
        std::chrono::milliseconds timeout{0};
        unsigned workers = 1;
    };

    enum class Verdict
    {
        found,
        not_magic,
        indeterminate
    };

    auto verdict_name(Verdict v) -> std::string;

    struct SearchOutcome
    {
        Verdict verdict = Verdict::indeterminate;
        std::optional<Labeling> labeling;
        std::optional<long long> magic_constant;
        /// Why the verdict was reached without search, or why it is indeterminate.
        std::string reason;
        /// True when |N_D(x)| differs between vertices and the magic constant could not
        /// be fixed up front.
        bool pairwise_fallback = false;
        std::uint64_t nodes = 0;
        std::chrono::milliseconds elapsed{0};
    };

    /// The naive permutation enumeration. Needs a regular graph with at most 10 vertices.
    auto search_naive(const Graph & g, const DistanceSet & d, const SearchConfig & cfg) -> SearchOutcome;

    /// Complete backtracking search with weight-bracket pruning and forced-label
    /// propagation. Needs a regular graph with at most 64 vertices.
    auto search_backtrack(const Graph & g, const DistanceSet & d, const SearchConfig & cfg) -> SearchOutcome;

    /// Dispatches on cfg.algorithm with D = cfg.d.
    auto search(const Graph & g, const SearchConfig & cfg) -> SearchOutcome;

    /// A distance magic labeling of H_{n,p} in part-major vertex order: complementary label
    /// pairs per part when n is even, otherwise via search_backtrack. Absent when none exists.
    auto hnp_labeling(int part_size, int parts) -> std::optional<Labeling>;
}

#endif
