#include <magiclab/generators.hh>

#include <bit>
#include <sstream>
#include <stdexcept>

using std::string;
using std::to_string;
using std::vector;

namespace magiclab
{
    namespace
    {
        auto require(bool ok, const string & message) -> void
        {
            if (! ok)
                throw std::invalid_argument(message);
        }
    }

    auto complete(int n) -> Graph
    {
        require(n >= 1, "complete: n must be positive");
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto cycle(int n) -> Graph
    {
        require(n >= 3, "cycle: n must be at least 3");
        Graph g(n);
        for (int i = 0; i < n; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }

    auto complete_multipartite(int part_size, int parts) -> Graph
    {
        require(part_size >= 1 && parts >= 1, "complete_multipartite: part size and part count must be positive");
        int n = part_size * parts;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (u / part_size != v / part_size)
                    g.add_edge(u, v);
        return g;
    }

    auto hamming(int d, int q) -> Graph
    {
        require(d >= 1 && q >= 2, "hamming: need d >= 1 and q >= 2");
        long n = 1;
        for (int i = 0; i < d; ++i) {
            n *= q;
            require(n <= 1 << 16, "hamming: graph too large");
        }
        Graph g(static_cast<int>(n));
        for (int u = 0; u < n; ++u) {
            // Change one digit of u at a time; only add edges upwards.
            for (int place = 1, rest = u; place < n; place *= q, rest /= q) {
                int digit = rest % q;
                for (int other = digit + 1; other < q; ++other)
                    g.add_edge(u, u + (other - digit) * place);
            }
        }
        return g;
    }

    auto johnson(int v, int k) -> Graph
    {
        require(v >= 1 && k >= 1 && k <= v && v <= 63, "johnson: need 1 <= k <= v <= 63");
        // Colex order of k-subsets equals increasing order of their bitmasks.
        vector<std::uint64_t> subsets;
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < (std::uint64_t{1} << v);) {
            subsets.push_back(s);
            require(subsets.size() <= 1 << 16, "johnson: graph too large");
            // Gosper's hack: next integer with the same popcount.
            std::uint64_t low = s & -s, ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
        Graph g(static_cast<int>(subsets.size()));
        for (std::size_t i = 0; i < subsets.size(); ++i)
            for (std::size_t j = i + 1; j < subsets.size(); ++j)
                if (std::popcount(subsets[i] & subsets[j]) == k - 1)
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    auto rook(int m) -> Graph
    {
        require(m >= 1, "rook: m must be positive");
        Graph g(m * m);
        for (int u = 0; u < m * m; ++u)
            for (int v = u + 1; v < m * m; ++v)
                if (u / m == v / m || u % m == v % m)
                    g.add_edge(u, v);
        return g;
    }

    auto clebsch() -> Graph
    {
        Graph g(16);
        for (int u = 0; u < 16; ++u)
            for (int v = u + 1; v < 16; ++v) {
                int w = std::popcount(static_cast<unsigned>(u ^ v));
                if (w == 1 || w == 4)
                    g.add_edge(u, v);
            }
        return g;
    }

    auto generate(const string & family, const vector<int> & params) -> Graph
    {
        auto arity = [&](std::size_t expected) {
            require(params.size() == expected,
                family + " takes " + to_string(expected) + " parameter(s), got " + to_string(params.size()));
        };

        if (family == "complete") {
            arity(1);
            return complete(params[0]);
        }
        if (family == "cycle") {
            arity(1);
            return cycle(params[0]);
        }
        if (family == "complete_multipartite") {
            arity(2);
            return complete_multipartite(params[0], params[1]);
        }
        if (family == "hamming") {
            arity(2);
            return hamming(params[0], params[1]);
        }
        if (family == "johnson") {
            arity(2);
            return johnson(params[0], params[1]);
        }
        if (family == "rook") {
            arity(1);
            return rook(params[0]);
        }
        if (family == "clebsch") {
            arity(0);
            return clebsch();
        }
        throw std::invalid_argument("unknown graph family '" + family + "'");
    }

    auto generate(const string & spec) -> Graph
    {
        auto colon = spec.find(':');
        string family = spec.substr(0, colon);
        vector<int> params;
        if (colon != string::npos) {
            std::istringstream s(spec.substr(colon + 1));
            string item;
            while (std::getline(s, item, ',')) {
                std::size_t used = 0;
                int value = 0;
                try {
                    value = std::stoi(item, &used);
                }
                catch (const std::exception &) {
                    throw std::invalid_argument("bad family parameter '" + item + "' in '" + spec + "'");
                }
                require(used == item.size(), "bad family parameter '" + item + "' in '" + spec + "'");
                params.push_back(value);
            }
        }
        return generate(family, params);
    }
}
