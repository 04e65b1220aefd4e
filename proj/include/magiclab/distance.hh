#ifndef MAGICLAB_DISTANCE_HH
#define MAGICLAB_DISTANCE_HH

#include <magiclab/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace magiclab
{
    /// Shortest-path lengths between every pair of vertices, by BFS from each vertex.
    class DistanceMatrix
    {
    public:
        static constexpr int unreachable = -1;

        explicit DistanceMatrix(const Graph & g);

        auto order() const -> int { return _n; }
        auto at(Vertex u, Vertex v) const -> int { return _dist[static_cast<std::size_t>(u) * _n + v]; }
        auto connected() const -> bool { return _connected; }

        /// Largest finite distance; absent for disconnected graphs.
        auto diameter() const -> std::optional<int>;

    private:
        int _n;
        bool _connected = true;
        int _max_finite = 0;
        std::vector<int> _dist;
    };

    auto distance_matrix(const Graph & g) -> DistanceMatrix;

    /// A nonempty sorted set of non-negative distances.
    class DistanceSet
    {
    public:
        DistanceSet(std::initializer_list<int> members);
        explicit DistanceSet(std::vector<int> members);

        /// Accepts "0,1", "{0,1}" and whitespace between items.
        static auto parse(const std::string & text) -> DistanceSet;

        /// {0, ..., diameter} minus this set; absent if that is empty.
        auto complement_within(int diameter) const -> std::optional<DistanceSet>;

        auto contains(int d) const -> bool;
        auto members() const -> const std::vector<int> & { return _members; }
        auto max() const -> int { return _members.back(); }

        /// "0,1"
        auto to_string() const -> std::string;

        auto operator==(const DistanceSet &) const -> bool = default;

    private:
        std::vector<int> _members;
    };

    /// N_D(x): the vertices whose distance from x lies in D. Unreachable vertices never match.
    auto d_neighborhood(const DistanceMatrix & dist, Vertex x, const DistanceSet & d) -> std::vector<Vertex>;
    auto d_neighborhood(const Graph & g, Vertex x, const DistanceSet & d) -> std::vector<Vertex>;
}

#endif
