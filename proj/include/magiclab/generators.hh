#ifndef MAGICLAB_GENERATORS_HH
#define MAGICLAB_GENERATORS_HH

#include <magiclab/graph.hh>

#include <string>
#include <vector>

namespace magiclab
{
    // Every family documents its vertex order so that search results are reproducible.

    /// K_n.
    auto complete(int n) -> Graph;

    /// C_n, vertex i adjacent to i +- 1 mod n. Needs n >= 3.
    auto cycle(int n) -> Graph;

    /// H_{n,p}: p parts of n vertices each; part j holds vertices j*n .. j*n+n-1.
    auto complete_multipartite(int part_size, int parts) -> Graph;

    /// H(d,q): words of length d over q symbols, numbered as base-q integers with the
    /// first symbol most significant; adjacent iff the words differ in one position.
    auto hamming(int d, int q) -> Graph;

    /// J(v,k): k-subsets of {0..v-1} in colex order; adjacent iff they meet in k-1 points.
    auto johnson(int v, int k) -> Graph;

    /// m x m rook's graph, cell (i,j) is vertex i*m + j.
    auto rook(int m) -> Graph;

    /// Folded 5-cube on the 4-bit vectors 0..15, adjacent iff the XOR has weight 1 or 4.
    auto clebsch() -> Graph;

    /// Dispatch on family name: complete, cycle, complete_multipartite, hamming, johnson,
    /// rook, clebsch. Throws std::invalid_argument on unknown names or bad parameters.
    auto generate(const std::string & family, const std::vector<int> & params) -> Graph;

    /// "hamming:3,3" or "clebsch".
    auto generate(const std::string & spec) -> Graph;
}

#endif
