#include <magiclab/graph6.hh>

#include <cstdint>

using std::size_t;
using std::string;
using std::string_view;

namespace magiclab
{
    Graph6Error::Graph6Error(const string & message, size_t offset) :
        std::runtime_error("graph6: " + message + " at byte " + std::to_string(offset)),
        _offset(offset)
    {
    }

    namespace
    {
        constexpr string_view header = ">>graph6<<";

        auto sextet(string_view text, size_t pos) -> int
        {
            if (pos >= text.size())
                throw Graph6Error("unexpected end of input", pos);
            auto ch = static_cast<unsigned char>(text[pos]);
            if (ch < 63 || ch > 126)
                throw Graph6Error("byte " + std::to_string(ch) + " outside printable range 63..126", pos);
            return ch - 63;
        }

        auto edge_bytes(long n) -> long
        {
            return (n * (n - 1) / 2 + 5) / 6;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        size_t pos = 0;
        if (text.starts_with(header))
            pos = header.size();
        if (text.ends_with('\n'))
            text.remove_suffix(1);
        if (text.ends_with('\r'))
            text.remove_suffix(1);

        long n = 0;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            int bytes = 3;
            if (pos < text.size() && text[pos] == '~') {
                ++pos;
                bytes = 6;
            }
            for (int i = 0; i < bytes; ++i)
                n = (n << 6) | sextet(text, pos + i);
            pos += bytes;
        }
        else
            n = sextet(text, pos++);

        if (n < 1)
            throw Graph6Error("graphs must have at least one vertex", pos - 1);
        if (n > (1L << 24))
            throw Graph6Error("order " + std::to_string(n) + " too large", pos - 1);

        long expected = edge_bytes(n);
        if (static_cast<long>(text.size() - pos) != expected) {
            if (static_cast<long>(text.size() - pos) < expected)
                throw Graph6Error("expected " + std::to_string(expected) + " edge bytes for order " + std::to_string(n),
                    text.size());
            throw Graph6Error("trailing data after edge bytes", pos + expected);
        }

        Graph g(static_cast<int>(n));
        long bit = 0;
        long total = n * (n - 1) / 2;
        for (long j = 1; j < n; ++j)
            for (long i = 0; i < j; ++i, ++bit) {
                size_t at = pos + bit / 6;
                if ((sextet(text, at) >> (5 - bit % 6)) & 1)
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }

        if (total % 6 != 0) {
            size_t last = pos + expected - 1;
            int padding = 6 - static_cast<int>(total % 6);
            if (sextet(text, last) & ((1 << padding) - 1))
                throw Graph6Error("nonzero padding bits", last);
        }
        return g;
    }

    auto write_graph6(const Graph & g) -> string
    {
        long n = g.order();
        string result;
        if (n <= 62)
            result += static_cast<char>(63 + n);
        else if (n <= 258047) {
            result += '~';
            for (int shift = 12; shift >= 0; shift -= 6)
                result += static_cast<char>(63 + ((n >> shift) & 63));
        }
        else {
            result += "~~";
            for (int shift = 30; shift >= 0; shift -= 6)
                result += static_cast<char>(63 + ((n >> shift) & 63));
        }

        int acc = 0, filled = 0;
        for (long j = 1; j < n; ++j)
            for (long i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
                if (++filled == 6) {
                    result += static_cast<char>(63 + acc);
                    acc = filled = 0;
                }
            }
        if (filled)
            result += static_cast<char>(63 + (acc << (6 - filled)));
        return result;
    }
}
