#pragma once

#include "gwalk/errors.hpp"
#include "gwalk/matrix.hpp"
#include "gwalk/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwalk {

/// Directed arc of a simple graph; both orientations of every edge exist.
struct Arc {
    int origin;
    int terminus;

    Arc inverse() const { return {terminus, origin}; }
    bool operator==(const Arc& o) const { return origin == o.origin && terminus == o.terminus; }
};

/// Immutable simple finite graph: dense symmetric 0/1 adjacency with zero
/// diagonal, 0-based vertex ids, and a human-readable construction label.
class Graph {
public:
    /// Builds from an edge list; duplicate edges collapse, loops are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string label = "");

    int n() const { return n_; }
    bool adjacent(int x, int y) const { return adj_[static_cast<size_t>(x) * n_ + y] != 0; }
    int degree(int x) const;
    long edge_count() const;
    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const;

    IntMat adjacency_matrix() const;
    std::vector<int> neighbors(int x) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    Graph(int n, std::vector<uint8_t> adj, std::string label);

    int n_;
    std::vector<uint8_t> adj_; // row-major n*n
    std::string label_;
};

// Named constructors. Vertex numbering is canonical per family so that
// derived artifacts (arc orders, operator matrices, reports) are stable.

/// C_n, vertices 0..n-1 around the cycle; n >= 3.
Graph cycle(int n);
/// K_n; n >= 1.
Graph complete(int n);
/// Complete multipartite graph; vertices are part-major (part 0 first).
Graph complete_multipartite(const std::vector<int>& parts);
/// Hamming graph H(d,q): words of {0..q-1}^d in lexicographic order,
/// adjacent iff Hamming distance 1. d >= 1, q >= 1.
Graph hamming(int d, int q);
/// Circulant Cay(Z_n, S): the connection set is symmetrized (S = -S mod n)
/// and sorted; 0 mod n is rejected.
Graph circulant(int n, const std::vector<int>& connection);
/// Line graph: vertices are the edges of g sorted lexicographically as
/// (min,max) pairs; adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);
Graph complement(const Graph& g);
/// m-coclique extension (adjacency A tensor J_m): vertex (x,i) gets index
/// x*m + i (vertex-major block order). m >= 1.
Graph coclique_extension(const Graph& g, int m);
/// Cartesian product: vertex (u,v) gets index u*b.n()+v.
Graph cartesian_product(const Graph& a, const Graph& b);

/// Parses one graph from the construction-expression grammar:
///   expr := cycle(n) | complete(n) | complete_multipartite(n1,...,nk)
///         | hamming(d,q) | cay(n; s1,...,sm) | line(expr) | complement(expr)
///         | coclique(expr, m) | cartesian(expr, expr) | graph6:"<string>"
/// Names are case-insensitive; the label is set to the canonical spelling.
Graph construct(std::string_view expr);

/// Standard graph6 decoder (big-endian 6-bit groups); throws ParseError on
/// malformed headers or truncated bit streams.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

struct BasicPredicates {
    std::optional<int> regular; // common valency when regular
    bool connected = false;
    bool complete = false;
    bool bipartite = false;
};

BasicPredicates basic_predicates(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by minimum vertex.
std::vector<std::vector<int>> components(const Graph& g);

/// All 2|E| arcs sorted by (origin, terminus).
std::vector<Arc> arcs(const Graph& g);

/// Number of unordered triangles containing x; equals (A^3)_xx / 2.
Int count_triangles_through(const Graph& g, int x);

struct QuadrangleCount {
    Int total;
    std::vector<Int> through;
};

/// Counts 4-cycles (C_4 subgraphs, chords permitted). Brute force over
/// 4-subsets for n <= 64, diagonal-pair counting sum C(codeg,2) otherwise;
/// both give the count that matches tr(A^4) = n(2k^2-k) + 8q on regular graphs.
QuadrangleCount count_quadrangles(const Graph& g);

/// Row x of A^r: walk counts of length r from x to every vertex. r >= 0.
std::vector<Int> walk_counts(const Graph& g, int x, long r);

} // namespace gwalk
