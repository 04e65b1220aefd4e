#include <magiclab/generators.hh>
#include <magiclab/magic_search.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using std::chrono::duration_cast;
using std::chrono::milliseconds;
using std::chrono::steady_clock;

namespace magiclab
{
    auto magic_constant(long long n, long long r, NeighbourhoodMode mode) -> optional<long long>
    {
        long long twice = (mode == NeighbourhoodMode::open ? r : r + 1) * (n + 1);
        if (twice % 2 != 0)
            return std::nullopt;
        return twice / 2;
    }

    auto parity_precheck(long long n, long long r, NeighbourhoodMode mode) -> bool
    {
        if (mode == NeighbourhoodMode::open)
            return r % 2 == 0;
        return (n + r) % 2 == 1;
    }

    namespace
    {
        auto check_bijection(const Labeling & f, int n) -> void
        {
            if (static_cast<int>(f.size()) != n)
                throw std::invalid_argument("labeling has " + std::to_string(f.size()) + " labels for "
                    + std::to_string(n) + " vertices");
            vector<bool> seen(n + 1, false);
            for (int label : f) {
                if (label < 1 || label > n || seen[label])
                    throw std::invalid_argument("labeling is not a bijection onto 1.." + std::to_string(n));
                seen[label] = true;
            }
        }

        auto neighbourhood_table(const Graph & g, const DistanceSet & d) -> vector<vector<Vertex>>
        {
            DistanceMatrix dist(g);
            vector<vector<Vertex>> table;
            table.reserve(g.order());
            for (Vertex x = 0; x < g.order(); ++x)
                table.push_back(d_neighborhood(dist, x, d));
            return table;
        }

        auto weight(const vector<Vertex> & nbhd, const Labeling & f) -> long long
        {
            long long w = 0;
            for (auto y : nbhd)
                w += f[y];
            return w;
        }

        /// Everything both engines need before enumerating.
        struct Problem
        {
            int n = 0;
            vector<vector<Vertex>> nbhd;
            optional<long long> k;
            bool pairwise_fallback = false;
            /// Set when the verdict is decided without search.
            optional<Verdict> shortcut;
            string reason;
        };

        auto prepare(const Graph & g, const DistanceSet & d) -> Problem
        {
            auto degree = g.degree(0);
            for (Vertex v = 1; v < g.order(); ++v)
                if (g.degree(v) != degree)
                    throw std::invalid_argument("magic search requires a regular graph");

            Problem p;
            p.n = g.order();
            p.nbhd = neighbourhood_table(g, d);

            auto d_degree = p.nbhd[0].size();
            bool constant = std::all_of(p.nbhd.begin(), p.nbhd.end(), [&](auto & s) { return s.size() == d_degree; });
            if (constant) {
                // Summing all weights counts every label d_degree times.
                long long twice = static_cast<long long>(d_degree) * (p.n + 1);
                if (twice % 2 != 0) {
                    p.shortcut = Verdict::not_magic;
                    p.reason = "magic constant " + std::to_string(d_degree) + "*(n+1)/2 is not an integer";
                    if (d == DistanceSet{1})
                        p.reason = "odd degree";
                }
                else
                    p.k = twice / 2;
            }
            else {
                p.pairwise_fallback = true;
                bool some_empty = std::any_of(p.nbhd.begin(), p.nbhd.end(), [](auto & s) { return s.empty(); });
                if (some_empty) {
                    p.shortcut = Verdict::not_magic;
                    p.reason = "some D-neighbourhoods are empty and others are not";
                }
            }
            return p;
        }

        auto shortcut_outcome(const Problem & p) -> SearchOutcome
        {
            SearchOutcome out;
            out.verdict = *p.shortcut;
            out.reason = p.reason;
            out.pairwise_fallback = p.pairwise_fallback;
            return out;
        }

        auto deadline_for(const SearchConfig & cfg, steady_clock::time_point start) -> optional<steady_clock::time_point>
        {
            if (cfg.timeout.count() <= 0)
                return std::nullopt;
            return start + cfg.timeout;
        }

        class Backtracker
        {
        public:
            Backtracker(const Problem & p, const vector<Vertex> & order, std::atomic<bool> & stop,
                optional<steady_clock::time_point> deadline) :
                _p(p),
                _order(order),
                _stop(stop),
                _deadline(deadline),
                _label(p.n, 0),
                _partial(p.n, 0),
                _remaining(p.n, 0),
                _k(p.k)
            {
                for (Vertex x = 0; x < p.n; ++x)
                    _remaining[x] = static_cast<int>(p.nbhd[x].size());
                _trail.reserve(p.n);
            }

            /// Explore the subtree where the first vertex in the order carries first_label.
            auto run_subtree(int first_label) -> bool
            {
                ++_nodes;
                if (assign_and_propagate(_order.front(), first_label) && solve())
                    return true;
                undo_to(0);
                _cursor = 0;
                return false;
            }

            auto labeling() const -> Labeling { return _label; }
            auto k() const -> optional<long long> { return _k; }
            auto nodes() const -> uint64_t { return _nodes; }
            auto timed_out() const -> bool { return _timed_out; }

        private:
            auto unused_mask() const -> uint64_t
            {
                uint64_t all = _p.n == 64 ? ~uint64_t{0} : (uint64_t{1} << _p.n) - 1;
                return all & ~_used;
            }

            auto assign(Vertex v, int label) -> void
            {
                _label[v] = label;
                _used |= uint64_t{1} << (label - 1);
                _trail.push_back(v);
                for (auto x : _p.nbhd[v]) {
                    _partial[x] += label;
                    --_remaining[x];
                }
            }

            auto undo_to(std::size_t size) -> void
            {
                while (_trail.size() > size) {
                    Vertex v = _trail.back();
                    _trail.pop_back();
                    int label = _label[v];
                    for (auto x : _p.nbhd[v]) {
                        _partial[x] -= label;
                        ++_remaining[x];
                    }
                    _used &= ~(uint64_t{1} << (label - 1));
                    _label[v] = 0;
                }
                if (_k_fixed_at && _trail.size() < *_k_fixed_at) {
                    _k.reset();
                    _k_fixed_at.reset();
                }
            }

            // Sums of the m smallest and m largest unused labels.
            auto bracket(int m) const -> std::pair<long long, long long>
            {
                long long low = 0, high = 0;
                uint64_t lo_bits = unused_mask(), hi_bits = lo_bits;
                for (int i = 0; i < m; ++i) {
                    int lo = std::countr_zero(lo_bits);
                    lo_bits &= lo_bits - 1;
                    low += lo + 1;
                    int hi = 63 - std::countl_zero(hi_bits);
                    hi_bits &= ~(uint64_t{1} << hi);
                    high += hi + 1;
                }
                return {low, high};
            }

            auto assign_and_propagate(Vertex v, int label) -> bool
            {
                assign(v, label);
                vector<Vertex> queue{v};
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    for (auto x : _p.nbhd[queue[head]]) {
                        if (_remaining[x] == 0) {
                            if (! _k) {
                                _k = _partial[x];
                                _k_fixed_at = _trail.size();
                            }
                            else if (_partial[x] != *_k)
                                return false;
                            continue;
                        }
                        if (! _k)
                            continue;
                        auto [low, high] = bracket(_remaining[x]);
                        if (_partial[x] + low > *_k || _partial[x] + high < *_k)
                            return false;
                        if (_remaining[x] == 1) {
                            long long forced = *_k - _partial[x];
                            if (forced < 1 || forced > _p.n || (_used >> (forced - 1)) & 1)
                                return false;
                            Vertex y = *std::find_if(_p.nbhd[x].begin(), _p.nbhd[x].end(),
                                [&](Vertex w) { return _label[w] == 0; });
                            ++_nodes;
                            assign(y, static_cast<int>(forced));
                            queue.push_back(y);
                        }
                    }
                }
                return true;
            }

            auto out_of_time() -> bool
            {
                if (_stop.load(std::memory_order_relaxed))
                    return true;
                if (_deadline && (++_polls & 1023) == 0 && steady_clock::now() > *_deadline) {
                    _timed_out = true;
                    return true;
                }
                return false;
            }

            auto solve() -> bool
            {
                if (_trail.size() == static_cast<std::size_t>(_p.n))
                    return true;
                if (out_of_time())
                    return false;

                while (_label[_order[_cursor]] != 0)
                    ++_cursor;
                Vertex next = _order[_cursor];
                auto saved_cursor = _cursor;

                for (uint64_t candidates = unused_mask(); candidates; candidates &= candidates - 1) {
                    int label = std::countr_zero(candidates) + 1;
                    auto save = _trail.size();
                    ++_nodes;
                    if (assign_and_propagate(next, label) && solve())
                        return true;
                    undo_to(save);
                    _cursor = saved_cursor;
                    if (_timed_out || _stop.load(std::memory_order_relaxed))
                        return false;
                }
                return false;
            }

            const Problem & _p;
            const vector<Vertex> & _order;
            std::atomic<bool> & _stop;
            optional<steady_clock::time_point> _deadline;

            vector<int> _label;
            vector<long long> _partial;
            vector<int> _remaining;
            vector<Vertex> _trail;
            uint64_t _used = 0;
            std::size_t _cursor = 0;
            optional<long long> _k;
            optional<std::size_t> _k_fixed_at;
            uint64_t _nodes = 0;
            uint64_t _polls = 0;
            bool _timed_out = false;
        };

        // Greedy constraint-first order: repeatedly take the vertex with the most D-neighbours
        // already ordered, ties broken by smallest index.
        auto constraint_first_order(const Problem & p) -> vector<Vertex>
        {
            vector<Vertex> order;
            vector<bool> placed(p.n, false);
            vector<int> placed_neighbours(p.n, 0);
            for (int step = 0; step < p.n; ++step) {
                Vertex best = -1;
                for (Vertex v = 0; v < p.n; ++v)
                    if (! placed[v] && (best == -1 || placed_neighbours[v] > placed_neighbours[best]))
                        best = v;
                placed[best] = true;
                order.push_back(best);
                for (auto x : p.nbhd[best])
                    ++placed_neighbours[x];
            }
            return order;
        }
    }

    auto verify_labeling(const Graph & g, const DistanceSet & d, const Labeling & f) -> optional<long long>
    {
        check_bijection(f, g.order());
        auto table = neighbourhood_table(g, d);
        long long k = weight(table[0], f);
        for (Vertex x = 1; x < g.order(); ++x)
            if (weight(table[x], f) != k)
                return std::nullopt;
        return k;
    }

    auto labeling_to_string(const Labeling & f) -> string
    {
        string result;
        for (std::size_t i = 0; i < f.size(); ++i)
            result += (i ? "," : "") + std::to_string(f[i]);
        return result;
    }

    auto parse_labeling(const string & text) -> Labeling
    {
        Labeling f;
        std::istringstream s(text);
        string item;
        while (std::getline(s, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                throw std::invalid_argument("bad label '" + item + "'");
            }
            if (used != item.size())
                throw std::invalid_argument("bad label '" + item + "'");
            f.push_back(value);
        }
        return f;
    }

    auto verdict_name(Verdict v) -> string
    {
        switch (v) {
        case Verdict::found: return "found";
        case Verdict::not_magic: return "not_magic";
        case Verdict::indeterminate: return "indeterminate";
        }
        return "?";
    }

    auto search_naive(const Graph & g, const DistanceSet & d, const SearchConfig & cfg) -> SearchOutcome
    {
        if (g.order() > 10)
            throw std::invalid_argument("naive search is limited to 10 vertices");
        auto start = steady_clock::now();
        auto p = prepare(g, d);
        if (p.shortcut)
            return shortcut_outcome(p);
        auto deadline = deadline_for(cfg, start);

        SearchOutcome out;
        out.pairwise_fallback = p.pairwise_fallback;
        Labeling f(p.n);
        std::iota(f.begin(), f.end(), 1);
        do {
            ++out.nodes;
            if (deadline && (out.nodes & 4095) == 0 && steady_clock::now() > *deadline) {
                out.verdict = Verdict::indeterminate;
                out.reason = "timeout";
                out.elapsed = duration_cast<milliseconds>(steady_clock::now() - start);
                return out;
            }
            long long k = p.k ? *p.k : weight(p.nbhd[0], f);
            int i = 0;
            while (i < p.n && weight(p.nbhd[i], f) == k)
                ++i;
            if (i == p.n) {
                out.verdict = Verdict::found;
                out.labeling = f;
                out.magic_constant = k;
                out.elapsed = duration_cast<milliseconds>(steady_clock::now() - start);
                return out;
            }
        } while (std::next_permutation(f.begin(), f.end()));

        out.verdict = Verdict::not_magic;
        out.reason = "all permutations exhausted";
        out.elapsed = duration_cast<milliseconds>(steady_clock::now() - start);
        return out;
    }

    auto search_backtrack(const Graph & g, const DistanceSet & d, const SearchConfig & cfg) -> SearchOutcome
    {
        if (g.order() > 64)
            throw std::invalid_argument("backtracking search is limited to 64 vertices");
        auto start = steady_clock::now();
        auto p = prepare(g, d);
        if (p.shortcut)
            return shortcut_outcome(p);
        auto deadline = deadline_for(cfg, start);
        auto order = constraint_first_order(p);

        // With a fixed k, relabelling l -> n+1-l maps magic labelings to magic labelings, so
        // the first vertex only needs the lower half of the labels.
        vector<int> first_labels;
        for (int label = 1; label <= p.n; ++label)
            if (! p.k || 2 * label <= p.n + 1)
                first_labels.push_back(label);

        std::atomic<bool> stop{false};
        std::atomic<std::size_t> next_index{0};
        std::atomic<uint64_t> total_nodes{0};
        std::atomic<bool> any_timeout{false};
        std::mutex winner_mutex;
        SearchOutcome out;
        out.pairwise_fallback = p.pairwise_fallback;

        auto worker = [&] {
            Backtracker engine(p, order, stop, deadline);
            for (auto i = next_index++; i < first_labels.size() && ! stop.load(); i = next_index++) {
                if (engine.run_subtree(first_labels[i])) {
                    std::lock_guard lock(winner_mutex);
                    if (! stop.exchange(true)) {
                        out.labeling = engine.labeling();
                        out.magic_constant = engine.k();
                    }
                    break;
                }
                if (engine.timed_out()) {
                    any_timeout = true;
                    stop = true;
                    break;
                }
            }
            total_nodes += engine.nodes();
        };

        unsigned workers = std::max(1u, cfg.workers);
        if (workers == 1)
            worker();
        else {
            vector<std::jthread> threads;
            for (unsigned t = 0; t < workers; ++t)
                threads.emplace_back(worker);
        }

        out.nodes = total_nodes;
        out.elapsed = duration_cast<milliseconds>(steady_clock::now() - start);
        if (out.labeling) {
            out.verdict = Verdict::found;
            if (verify_labeling(g, d, *out.labeling) != out.magic_constant)
                throw std::logic_error("backtracking produced a labeling that does not verify");
        }
        else if (any_timeout) {
            out.verdict = Verdict::indeterminate;
            out.reason = "timeout";
        }
        else {
            out.verdict = Verdict::not_magic;
            out.reason = "search space exhausted";
        }
        return out;
    }

    auto search(const Graph & g, const SearchConfig & cfg) -> SearchOutcome
    {
        if (cfg.algorithm == SearchAlgorithm::naive)
            return search_naive(g, cfg.d, cfg);
        return search_backtrack(g, cfg.d, cfg);
    }

    auto hnp_labeling(int part_size, int parts) -> optional<Labeling>
    {
        if (part_size < 1 || parts < 1)
            throw std::invalid_argument("H_{n,p} needs positive n and p");
        int n = part_size * parts;
        if (parts == 1) {
            // Edgeless: every weight is zero.
            Labeling f(n);
            std::iota(f.begin(), f.end(), 1);
            return f;
        }
        if (part_size % 2 == 0) {
            Labeling f(n);
            int half = part_size / 2;
            for (int part = 0; part < parts; ++part)
                for (int t = 0; t < half; ++t) {
                    int low = part * half + t + 1;
                    f[part * part_size + 2 * t] = low;
                    f[part * part_size + 2 * t + 1] = n + 1 - low;
                }
            return f;
        }
        if (part_size == 1 || parts % 2 == 0)
            return std::nullopt;
        auto outcome = search_backtrack(complete_multipartite(part_size, parts), DistanceSet{1}, SearchConfig{});
        return outcome.labeling;
    }
}
