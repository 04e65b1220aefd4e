#include <magiclab/generators.hh>
#include <magiclab/linalg.hh>
#include <magiclab/srg.hh>

#include <stdexcept>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace magiclab
{
    auto srg_input_of(const Graph & g) -> optional<SrgInput>
    {
        if (g.edge_count() == static_cast<long>(g.order()) * (g.order() - 1) / 2)
            return CompleteGraph{g.order()};
        if (auto p = srg_parameters(g))
            return *p;
        return std::nullopt;
    }

    auto srg_input_to_string(const SrgInput & in) -> string
    {
        if (auto k = std::get_if<CompleteGraph>(&in))
            return "K_" + to_string(k->n);
        return std::get<SrgParams>(in).to_string();
    }

    auto hnp_predicate(int part_size, int parts) -> bool
    {
        if (part_size < 1 || parts < 1)
            throw std::invalid_argument("H_{n,p} needs positive n and p");
        if (parts == 1)
            return true;
        if (part_size == 1)
            return false;
        return part_size % 2 == 0 || parts % 2 == 1;
    }

    auto srg_multiplicities(const SrgParams & p) -> optional<std::pair<long long, long long>>
    {
        long long n = p.n, r = p.r, a = p.a, c = p.c;
        long long disc = (a - c) * (a - c) + 4 * (r - c);
        if (disc <= 0)
            return std::nullopt;
        long long numerator = 2 * r + (n - 1) * (a - c);
        long long q = 0;
        if (auto s = integer_sqrt(disc)) {
            if (numerator % *s != 0)
                return std::nullopt;
            q = numerator / *s;
        }
        else if (numerator != 0)
            return std::nullopt;

        if ((n - 1 - q) % 2 != 0)
            return std::nullopt;
        long long high = (n - 1 - q) / 2, low = (n - 1 + q) / 2;
        if (high < 0 || low < 0)
            return std::nullopt;
        return std::pair{high, low};
    }

    auto srg_feasible(const SrgParams & p) -> bool
    {
        if (p.r < 1 || p.a < 0 || p.a >= p.r || p.c < 1 || p.c > p.r || p.n < p.r + 2)
            return false;
        if (static_cast<long long>(p.r) * (p.r - p.a - 1) != static_cast<long long>(p.c) * (p.n - p.r - 1))
            return false;
        return srg_multiplicities(p).has_value();
    }

    auto srg_distance_sets() -> vector<DistanceSet>
    {
        return {DistanceSet{1}, DistanceSet{2}, DistanceSet{0, 1}, DistanceSet{0, 2}, DistanceSet{0, 1, 2}};
    }

    auto classify_srg_dmagic(const SrgInput & in) -> SrgVerdict
    {
        SrgVerdict v;
        const string all = "D = {0,1,2} covers every vertex, so each weight is the full label sum";

        if (auto k = std::get_if<CompleteGraph>(&in)) {
            if (k->n < 1)
                throw std::invalid_argument("complete graph needs at least one vertex");
            if (k->n == 1) {
                for (auto & d : srg_distance_sets())
                    v.by_d[d.to_string()] = {true, "single vertex"};
                return v;
            }
            const string closed = "closed distance magic iff complete";
            v.by_d["1"] = {false, "K_n: the open weight of x is the label sum minus f(x)"};
            v.by_d["0,2"] = {false, "dual of D = {1}"};
            v.by_d["0,1"] = {true, closed};
            v.by_d["2"] = {true, "dual of D = {0,1}; no vertex has a neighbour at distance 2"};
            v.by_d["0,1,2"] = {true, all};
            return v;
        }

        auto & p = std::get<SrgParams>(in);
        if (! srg_feasible(p))
            throw std::invalid_argument("infeasible SRG parameters " + p.to_string());

        bool dm = false;
        string dm_reason;
        if (p.c != p.r)
            dm_reason = "c != r: 0 is not an eigenvalue, so not complete multipartite";
        else {
            int part = p.n - p.r, parts = p.n / (p.n - p.r);
            string h = "H_{" + to_string(part) + "," + to_string(parts) + "}";
            dm = hnp_predicate(part, parts);
            dm_reason = dm ? h + " with n even or n, p both odd" : h + " with n odd and p even";
        }
        v.by_d["1"] = {dm, dm_reason};
        v.by_d["0,2"] = {dm, "dual of D = {1}: " + dm_reason};
        v.by_d["0,1"] = {false, "not complete: closed distance magic SRGs are complete"};
        v.by_d["2"] = {false, "dual of D = {0,1}: not complete"};
        v.by_d["0,1,2"] = {true, all};
        return v;
    }

    auto eq_ldrg_filter(const SrgParams & p) -> bool
    {
        if (p.r == 2)
            return p.c == 2;
        if (p.r < 2)
            return false;
        return static_cast<long long>(p.r - 2) * (p.r - p.c + p.a - 2) == p.r - p.c;
    }

    auto eq_cdm_filter(const SrgParams & p) -> bool
    {
        return static_cast<long long>(p.r - 1) * (p.c + 2 - p.r - p.a) == p.c - 1;
    }

    auto classify_srg_linegraph(const SrgInput & in) -> LineGraphVerdict
    {
        LineGraphVerdict v;
        if (auto k = std::get_if<CompleteGraph>(&in)) {
            switch (k->n) {
            case 1: throw std::invalid_argument("K_1 has no edges, so no line graph");
            case 2:
                v = {true, true, "L(K_2) = K_1", "L(K_2) = K_1"};
                break;
            case 3:
                v = {false, true, "L(K_3) = K_3 is not distance magic", "L(K_3) = K_3 is complete"};
                break;
            case 4:
                v = {true, false, "L(K_4) = H_{2,3}, part size even", "L(K_4) = H_{2,3} is not complete"};
                break;
            default:
                v = {false, false, "L(K_n) = J(n,2) has c = 4 != r = 2n-4", "L(K_n) = J(n,2) is not complete"};
            }
            return v;
        }

        auto & p = std::get<SrgParams>(in);
        if (p == SrgParams{4, 2, 0, 2}) {
            v.dm = true;
            v.dm_reason = "C_4: L(C_4) = C_4 = H_{2,2}";
        }
        else if (! eq_ldrg_filter(p))
            v.dm_reason = "2-r is not an eigenvalue, so 0 is not an eigenvalue of the line graph";
        else
            v.dm_reason = "candidate line graph refuted by exhaustive search";

        if (! eq_cdm_filter(p))
            v.cdm_reason = "1-r is not an eigenvalue, so -1 is not an eigenvalue of the line graph";
        else
            v.cdm_reason = "candidate line graph refuted by exhaustive search";
        return v;
    }

    auto refutation_name(Refutation r) -> string
    {
        switch (r) {
        case Refutation::magic: return "magic";
        case Refutation::refuted_by_search: return "refuted_by_search";
        case Refutation::refuted_externally: return "refuted_externally";
        case Refutation::indeterminate: return "indeterminate";
        }
        return "?";
    }

    auto realize(const SrgInput & in) -> optional<Graph>
    {
        if (auto k = std::get_if<CompleteGraph>(&in))
            return complete(k->n);
        auto & p = std::get<SrgParams>(in);
        if (! srg_feasible(p))
            return std::nullopt;
        if (p.c == p.r)
            return complete_multipartite(p.n - p.r, p.n / (p.n - p.r));
        if (p == SrgParams{9, 4, 1, 2})
            return rook(3);
        if (p == SrgParams{16, 5, 0, 2})
            return clebsch();
        if (p == SrgParams{10, 3, 0, 1})
            return complement(line_graph(complete(5)));
        return std::nullopt;
    }

    namespace
    {
        // n from r(r-a-1) = c(n-r-1), if integral.
        auto order_from_counting(const Rac & t) -> optional<int>
        {
            int lhs = t.r * (t.r - t.a - 1);
            if (lhs % t.c != 0)
                return std::nullopt;
            return t.r + 1 + lhs / t.c;
        }

        auto name_of(const SrgInput & in) -> string
        {
            if (auto k = std::get_if<CompleteGraph>(&in))
                return "K_" + to_string(k->n);
            auto & p = std::get<SrgParams>(in);
            if (p == SrgParams{4, 2, 0, 2})
                return "C_4";
            if (p == SrgParams{6, 4, 2, 4})
                return "K_{2,2,2}";
            if (p == SrgParams{9, 4, 1, 2})
                return "3x3 rook graph";
            if (p == SrgParams{16, 5, 0, 2})
                return "Clebsch graph";
            if (p == SrgParams{10, 3, 0, 1})
                return "Petersen graph";
            return p.to_string();
        }

        auto settle(LineGraphCandidate & cand, const DistanceSet & d, const PipelineOptions & options) -> void
        {
            if (! options.run_searches) {
                cand.status = Refutation::indeterminate;
                return;
            }
            auto g = realize(cand.params);
            if (! g)
                throw std::logic_error("no construction for " + cand.name);
            auto lg = line_graph(*g);
            if (lg.order() > options.desk_scale_vertices) {
                cand.status = Refutation::refuted_externally;
                return;
            }
            auto cfg = options.search;
            cfg.algorithm = SearchAlgorithm::backtrack;
            cand.search = search_backtrack(lg, d, cfg);
            switch (cand.search->verdict) {
            case Verdict::found: cand.status = Refutation::magic; break;
            case Verdict::not_magic: cand.status = Refutation::refuted_by_search; break;
            case Verdict::indeterminate: cand.status = Refutation::indeterminate; break;
            }
        }

        auto add_unique(vector<LineGraphCandidate> & list, const SrgInput & in) -> void
        {
            for (auto & existing : list)
                if (existing.params == in)
                    return;
            LineGraphCandidate cand{name_of(in), in, Refutation::magic, std::nullopt};
            list.push_back(std::move(cand));
        }
    }

    auto linegraph_pipeline(const PipelineOptions & options) -> LineGraphPipeline
    {
        LineGraphPipeline result;

        // Open neighbourhoods. r = 2: 0 must be a root, so c = r = 2.
        for (int a = 0; a < 2; ++a) {
            Rac t{2, a, 2};
            auto n = order_from_counting(t);
            if (n && srg_feasible({*n, t.r, t.a, t.c}))
                add_unique(result.dm_candidates, SrgParams{*n, t.r, t.a, t.c});
        }
        for (int r = 3; r <= options.r_max; ++r)
            for (int a = 0; a < r; ++a)
                for (int c = 1; c <= r; ++c) {
                    Rac t{r, a, c};
                    if (! eq_ldrg_filter({0, r, a, c}))
                        continue;
                    if (r - c + a - 2 != 0 && c > 2)
                        continue;
                    if (r - c + a - 2 != 0)
                        result.bounded_before_feasibility.push_back(t);
                    auto n = order_from_counting(t);
                    if (n && srg_feasible({*n, r, a, c}))
                        add_unique(result.dm_candidates, SrgParams{*n, r, a, c});
                }

        // Closed neighbourhoods. c = 1 forces r + a = 3; c >= 2 forces c = r and a = 1, whose
        // only realization is the complete endpoint K_3.
        for (int r = 2; r <= options.r_max; ++r)
            for (int a = 0; a < r; ++a)
                for (int c = 1; c <= r; ++c) {
                    Rac t{r, a, c};
                    if (! eq_cdm_filter({0, r, a, c}))
                        continue;
                    if (c == 1)
                        result.cdm_before_feasibility.push_back(t);
                    auto n = order_from_counting(t);
                    if (! n)
                        continue;
                    if (*n == r + 1 && c == r && a == 1)
                        add_unique(result.cdm_candidates, CompleteGraph{*n});
                    else if (srg_feasible({*n, r, a, c}))
                        add_unique(result.cdm_candidates, SrgParams{*n, r, a, c});
                }

        for (auto & cand : result.dm_candidates)
            settle(cand, DistanceSet{1}, options);
        for (auto & cand : result.cdm_candidates)
            settle(cand, DistanceSet{0, 1}, options);
        return result;
    }
}
