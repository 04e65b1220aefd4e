#include <magiclab/distance.hh>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using std::optional;
using std::string;
using std::vector;

namespace magiclab
{
    DistanceMatrix::DistanceMatrix(const Graph & g) :
        _n(g.order()),
        _dist(static_cast<std::size_t>(g.order()) * g.order(), unreachable)
    {
        vector<Vertex> queue;
        queue.reserve(_n);
        for (Vertex s = 0; s < _n; ++s) {
            int * row = _dist.data() + static_cast<std::size_t>(s) * _n;
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                Vertex u = queue[head];
                for (auto v : g.neighbours(u))
                    if (row[v] == unreachable) {
                        row[v] = row[u] + 1;
                        _max_finite = std::max(_max_finite, row[v]);
                        queue.push_back(v);
                    }
            }
            if (static_cast<int>(queue.size()) != _n)
                _connected = false;
        }
    }

    auto DistanceMatrix::diameter() const -> optional<int>
    {
        if (! _connected)
            return std::nullopt;
        return _max_finite;
    }

    auto distance_matrix(const Graph & g) -> DistanceMatrix
    {
        return DistanceMatrix(g);
    }

    DistanceSet::DistanceSet(std::initializer_list<int> members) :
        DistanceSet(vector<int>(members))
    {
    }

    DistanceSet::DistanceSet(vector<int> members) :
        _members(std::move(members))
    {
        if (_members.empty())
            throw std::invalid_argument("distance set must be nonempty");
        std::sort(_members.begin(), _members.end());
        _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
        if (_members.front() < 0)
            throw std::invalid_argument("distances must be non-negative");
    }

    auto DistanceSet::parse(const string & text) -> DistanceSet
    {
        vector<int> members;
        string cleaned;
        for (char ch : text)
            if (ch != '{' && ch != '}' && ch != ' ' && ch != '\t')
                cleaned += ch;
        std::istringstream s(cleaned);
        string item;
        while (std::getline(s, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                throw std::invalid_argument("bad distance '" + item + "' in '" + text + "'");
            }
            if (used != item.size())
                throw std::invalid_argument("bad distance '" + item + "' in '" + text + "'");
            members.push_back(value);
        }
        return DistanceSet(std::move(members));
    }

    auto DistanceSet::complement_within(int diameter) const -> optional<DistanceSet>
    {
        vector<int> rest;
        for (int i = 0; i <= diameter; ++i)
            if (! contains(i))
                rest.push_back(i);
        if (rest.empty())
            return std::nullopt;
        return DistanceSet(std::move(rest));
    }

    auto DistanceSet::contains(int d) const -> bool
    {
        return std::binary_search(_members.begin(), _members.end(), d);
    }

    auto DistanceSet::to_string() const -> string
    {
        string result;
        for (std::size_t i = 0; i < _members.size(); ++i)
            result += (i ? "," : "") + std::to_string(_members[i]);
        return result;
    }

    auto d_neighborhood(const DistanceMatrix & dist, Vertex x, const DistanceSet & d) -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex y = 0; y < dist.order(); ++y) {
            int e = dist.at(x, y);
            if (e != DistanceMatrix::unreachable && d.contains(e))
                result.push_back(y);
        }
        return result;
    }

    auto d_neighborhood(const Graph & g, Vertex x, const DistanceSet & d) -> vector<Vertex>
    {
        return d_neighborhood(DistanceMatrix(g), x, d);
    }
}
