#ifndef MAGICLAB_GRAPH6_HH
#define MAGICLAB_GRAPH6_HH

#include <magiclab/graph.hh>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace magiclab
{
    class Graph6Error : public std::runtime_error
    {
    public:
        Graph6Error(const std::string & message, std::size_t offset);

        /// Byte offset into the input where the problem was detected.
        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// Parses one graph6 record. An optional ">>graph6<<" header and a single trailing
    /// newline are accepted; anything else after the edge bytes is an error.
    auto parse_graph6(std::string_view text) -> Graph;

    /// Canonical graph6 encoding, using the extended length prefix for n >= 63.
    auto write_graph6(const Graph & g) -> std::string;
}

#endif
