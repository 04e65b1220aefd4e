#ifndef MAGICLAB_GRAPH_HH
#define MAGICLAB_GRAPH_HH

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace magiclab
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on vertices 0..n-1, adjacency stored as packed bit rows.
    ///
    /// A Graph is a value type. Once a generator or parser hands one back it is never
    /// mutated by the library, so it can be shared freely between search workers.
    class Graph
    {
    public:
        explicit Graph(int n);

        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

        auto order() const -> int { return _n; }
        auto words_per_row() const -> int { return _words; }

        /// Throws std::invalid_argument on loops or out-of-range endpoints. Adding an
        /// existing edge is a no-op.
        auto add_edge(Vertex u, Vertex v) -> void;

        auto adjacent(Vertex u, Vertex v) const -> bool;
        auto degree(Vertex v) const -> int;
        auto neighbours(Vertex v) const -> std::vector<Vertex>;
        auto common_neighbour_count(Vertex u, Vertex v) const -> int;
        auto row(Vertex v) const -> std::span<const std::uint64_t>;

        auto edge_count() const -> long;

        /// Edges (u, v) with u < v, in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        auto operator==(const Graph &) const -> bool = default;

    private:
        auto check_vertex(Vertex v) const -> void;

        int _n;
        int _words;
        std::vector<std::uint64_t> _bits;
    };

    /// Vertices are the edges of g in Graph::edges() order; adjacent iff they share an endpoint.
    auto line_graph(const Graph & g) -> Graph;

    auto complement(const Graph & g) -> Graph;

    struct BasicProperties
    {
        bool connected = false;
        std::optional<int> regular_degree;
        std::optional<int> diameter;
    };

    auto basic_properties(const Graph & g) -> BasicProperties;

    /// Strongly regular parameters (n, r, a, c): r-regular on n vertices, adjacent pairs
    /// share a common neighbours, non-adjacent pairs share c.
    struct SrgParams
    {
        int n = 0;
        int r = 0;
        int a = 0;
        int c = 0;

        auto operator<=>(const SrgParams &) const = default;
        auto to_string() const -> std::string;
    };

    /// Absent unless g is connected, regular, of diameter 2 and both common-neighbour
    /// counts are constant. Complete graphs have no non-adjacent pair and return absent.
    auto srg_parameters(const Graph & g) -> std::optional<SrgParams>;

    /// {b_0, ..., b_{d-1}; c_1, ..., c_d}. The diameter is b.size() == c.size().
    struct IntersectionArray
    {
        std::vector<int> b;
        std::vector<int> c;

        auto diameter() const -> int { return static_cast<int>(b.size()); }
        auto degree() const -> int { return b.empty() ? 0 : b.front(); }

        /// b_i with the b_d = 0 convention.
        auto b_at(int i) const -> int;
        /// c_i with c_0 = 0.
        auto c_at(int i) const -> int;
        /// a_i = b_0 - b_i - c_i.
        auto a_at(int i) const -> int;

        /// Throws std::invalid_argument naming the first violated invariant.
        auto validate() const -> void;

        /// "b0,b1,...;c1,c2,..."
        auto to_string() const -> std::string;
        static auto parse(const std::string & text) -> IntersectionArray;

        auto operator==(const IntersectionArray &) const -> bool = default;
    };

    /// Requires g connected and regular; returns absent when g is not distance-regular
    /// (or the precondition fails).
    auto intersection_array(const Graph & g) -> std::optional<IntersectionArray>;
}

#endif
