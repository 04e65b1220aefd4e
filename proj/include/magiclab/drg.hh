#ifndef MAGICLAB_DRG_HH
#define MAGICLAB_DRG_HH

#include <magiclab/graph.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace magiclab
{
    class ArrayParseError : public std::runtime_error
    {
    public:
        ArrayParseError(const std::string & message, int line);

        auto line() const -> int { return _line; }

    private:
        int _line;
    };

    struct ArrayRecord
    {
        IntersectionArray array;
        long long order = 0;
        /// 1-based line in the source text.
        int line = 0;
    };

    /// 1 + sum of k_i, with k_0 = 1 and k_i = k_{i-1} b_{i-1} / c_i. Throws
    /// std::invalid_argument if some k_i is not an integer.
    auto vertex_count(const IntersectionArray & arr) -> long long;

    /// One array per line as "b0,b1,...;c1,...,cd"; '#' starts a comment, blank lines are
    /// skipped. Braces and whitespace around entries are tolerated.
    auto parse_array_file(const std::string & text) -> std::vector<ArrayRecord>;

    struct FilterRow
    {
        ArrayRecord record;
        bool even_degree = false;
        bool primitive = false;
        bool determinant = false;

        auto survives() const -> bool { return even_degree && primitive && determinant; }
    };

    struct FilterReport
    {
        std::vector<FilterRow> rows;
        std::vector<ArrayRecord> surviving;
    };

    /// Diameter-3 screen: even b_0, c_3 != b_0, and (b_0-b_2-c_2)(b_0-c_3) = b_2 c_3.
    /// Throws std::invalid_argument on a record whose diameter is not 3.
    auto diam3_magic_filter(const std::vector<ArrayRecord> & records) -> FilterReport;

    struct CrossCheckRow
    {
        ArrayRecord record;
        /// "hamming:3,3" etc.; absent when no buildable family matches.
        std::optional<std::string> family;
        std::string graph_name = "unknown";
        bool order_agrees = false;
    };

    /// Matches each record against the intersection arrays of the buildable diameter-3
    /// families (Hamming H(3,q), Johnson J(v,3), cycles C_6 and C_7).
    auto cross_check_known(const std::vector<ArrayRecord> & records) -> std::vector<CrossCheckRow>;

    /// Plain-text table with columns No, Intersection array, Order, Graph.
    auto format_table(const std::vector<CrossCheckRow> & rows) -> std::string;
}

#endif
