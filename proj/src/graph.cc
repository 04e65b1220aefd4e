#include <magiclab/distance.hh>
#include <magiclab/graph.hh>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace magiclab
{
    Graph::Graph(int n) :
        _n(n),
        _words((n + 63) / 64),
        _bits(static_cast<std::size_t>(n) * ((n + 63) / 64), 0)
    {
        if (n < 1)
            throw std::invalid_argument("graph must have at least one vertex, got " + to_string(n));
    }

    auto Graph::from_edges(int n, span<const Edge> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto Graph::check_vertex(Vertex v) const -> void
    {
        if (v < 0 || v >= _n)
            throw std::invalid_argument("vertex " + to_string(v) + " out of range for order " + to_string(_n));
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + to_string(u));
        _bits[static_cast<std::size_t>(u) * _words + v / 64] |= uint64_t{1} << (v % 64);
        _bits[static_cast<std::size_t>(v) * _words + u / 64] |= uint64_t{1} << (u % 64);
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return (_bits[static_cast<std::size_t>(u) * _words + v / 64] >> (v % 64)) & 1;
    }

    auto Graph::row(Vertex v) const -> span<const uint64_t>
    {
        return {_bits.data() + static_cast<std::size_t>(v) * _words, static_cast<std::size_t>(_words)};
    }

    auto Graph::degree(Vertex v) const -> int
    {
        int result = 0;
        for (auto w : row(v))
            result += std::popcount(w);
        return result;
    }

    auto Graph::neighbours(Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> result;
        auto bits = row(v);
        for (int w = 0; w < _words; ++w)
            for (auto word = bits[w]; word; word &= word - 1)
                result.push_back(w * 64 + std::countr_zero(word));
        return result;
    }

    auto Graph::common_neighbour_count(Vertex u, Vertex v) const -> int
    {
        auto ru = row(u), rv = row(v);
        int result = 0;
        for (int w = 0; w < _words; ++w)
            result += std::popcount(ru[w] & rv[w]);
        return result;
    }

    auto Graph::edge_count() const -> long
    {
        long total = 0;
        for (auto w : _bits)
            total += std::popcount(w);
        return total / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex u = 0; u < _n; ++u)
            for (Vertex v = u + 1; v < _n; ++v)
                if (adjacent(u, v))
                    result.emplace_back(u, v);
        return result;
    }

    auto line_graph(const Graph & g) -> Graph
    {
        auto es = g.edges();
        if (es.empty())
            throw std::invalid_argument("line graph of an edgeless graph is undefined");

        Graph result(static_cast<int>(es.size()));
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                auto [a, b] = es[i];
                auto [c, d] = es[j];
                if (a == c || a == d || b == c || b == d)
                    result.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph result(g.order());
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    namespace
    {
        auto common_degree(const Graph & g) -> optional<int>
        {
            int r = g.degree(0);
            for (Vertex v = 1; v < g.order(); ++v)
                if (g.degree(v) != r)
                    return std::nullopt;
            return r;
        }
    }

    auto basic_properties(const Graph & g) -> BasicProperties
    {
        DistanceMatrix dist(g);
        BasicProperties result;
        result.connected = dist.connected();
        result.regular_degree = common_degree(g);
        result.diameter = dist.diameter();
        return result;
    }

    auto SrgParams::to_string() const -> string
    {
        std::ostringstream s;
        s << "(" << n << "," << r << "," << a << "," << c << ")";
        return s.str();
    }

    auto srg_parameters(const Graph & g) -> optional<SrgParams>
    {
        auto r = common_degree(g);
        if (! r)
            return std::nullopt;
        DistanceMatrix dist(g);
        if (! dist.connected() || dist.diameter() != 2)
            return std::nullopt;

        optional<int> a, c;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                auto & slot = g.adjacent(u, v) ? a : c;
                int count = g.common_neighbour_count(u, v);
                if (! slot)
                    slot = count;
                else if (*slot != count)
                    return std::nullopt;
            }

        // Diameter 2 guarantees a non-adjacent pair; a can be missing only without edges,
        // which diameter 2 also rules out.
        return SrgParams{g.order(), *r, a.value_or(0), *c};
    }

    auto IntersectionArray::b_at(int i) const -> int
    {
        if (i < 0 || i > diameter())
            throw std::out_of_range("b index " + std::to_string(i));
        return i == diameter() ? 0 : b[i];
    }

    auto IntersectionArray::c_at(int i) const -> int
    {
        if (i < 0 || i > diameter())
            throw std::out_of_range("c index " + std::to_string(i));
        return i == 0 ? 0 : c[i - 1];
    }

    auto IntersectionArray::a_at(int i) const -> int
    {
        return degree() - b_at(i) - c_at(i);
    }

    auto IntersectionArray::validate() const -> void
    {
        if (b.empty())
            throw std::invalid_argument("intersection array must have diameter at least 1");
        if (b.size() != c.size())
            throw std::invalid_argument("intersection array has " + std::to_string(b.size()) + " b entries but "
                + std::to_string(c.size()) + " c entries");
        if (b[0] <= 0)
            throw std::invalid_argument("b_0 must be positive");
        if (c[0] != 1)
            throw std::invalid_argument("c_1 must be 1");
        for (int i = 0; i < diameter(); ++i) {
            if (b[i] < 1)
                throw std::invalid_argument("b_" + std::to_string(i) + " must be at least 1");
            if (c[i] < 1)
                throw std::invalid_argument("c_" + std::to_string(i + 1) + " must be at least 1");
        }
        for (int i = 0; i <= diameter(); ++i)
            if (a_at(i) < 0)
                throw std::invalid_argument("a_" + std::to_string(i) + " = " + std::to_string(a_at(i)) + " is negative");
    }

    auto IntersectionArray::to_string() const -> string
    {
        string result;
        for (std::size_t i = 0; i < b.size(); ++i)
            result += (i ? "," : "") + std::to_string(b[i]);
        result += ";";
        for (std::size_t i = 0; i < c.size(); ++i)
            result += (i ? "," : "") + std::to_string(c[i]);
        return result;
    }

    namespace
    {
        auto parse_int_list(const string & text) -> vector<int>
        {
            vector<int> result;
            std::istringstream s(text);
            string item;
            while (std::getline(s, item, ',')) {
                auto first = item.find_first_not_of(" \t{}");
                auto last = item.find_last_not_of(" \t{}");
                if (first == string::npos)
                    throw std::invalid_argument("empty entry in '" + text + "'");
                item = item.substr(first, last - first + 1);
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(item, &used);
                }
                catch (const std::exception &) {
                    throw std::invalid_argument("not an integer: '" + item + "'");
                }
                if (used != item.size())
                    throw std::invalid_argument("not an integer: '" + item + "'");
                result.push_back(value);
            }
            return result;
        }
    }

    auto IntersectionArray::parse(const string & text) -> IntersectionArray
    {
        auto semi = text.find(';');
        if (semi == string::npos || text.find(';', semi + 1) != string::npos)
            throw std::invalid_argument("intersection array needs exactly one ';': '" + text + "'");
        IntersectionArray result{parse_int_list(text.substr(0, semi)), parse_int_list(text.substr(semi + 1))};
        result.validate();
        return result;
    }

    auto intersection_array(const Graph & g) -> optional<IntersectionArray>
    {
        auto r = common_degree(g);
        if (! r)
            return std::nullopt;
        DistanceMatrix dist(g);
        if (! dist.connected())
            return std::nullopt;
        int d = *dist.diameter();
        if (d == 0)
            return std::nullopt;

        // counts[i] = (b_i, c_i), fixed by the first pair seen at distance i.
        vector<optional<std::pair<int, int>>> counts(d + 1);
        int n = g.order();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                int i = dist.at(u, v);
                int further = 0, closer = 0;
                for (auto w : g.neighbours(u)) {
                    int j = dist.at(w, v);
                    if (j == i + 1)
                        ++further;
                    else if (j == i - 1)
                        ++closer;
                }
                if (! counts[i])
                    counts[i] = std::pair{further, closer};
                else if (*counts[i] != std::pair{further, closer})
                    return std::nullopt;
            }

        IntersectionArray result;
        for (int i = 0; i < d; ++i)
            result.b.push_back(counts[i]->first);
        for (int i = 1; i <= d; ++i)
            result.c.push_back(counts[i]->second);
        return result;
    }
}
