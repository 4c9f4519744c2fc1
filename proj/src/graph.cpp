#include "gwalk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace gwalk {

Graph::Graph(int n, std::vector<uint8_t> adj, std::string label)
    : n_(n), adj_(std::move(adj)), label_(std::move(label)) {
    if (n_ < 1) throw std::domain_error("graph needs at least one vertex");
    for (int i = 0; i < n_; ++i) {
        if (adj_[static_cast<size_t>(i) * n_ + i] != 0)
            throw std::domain_error("loop on vertex " + std::to_string(i));
        for (int j = 0; j < n_; ++j) {
            uint8_t v = adj_[static_cast<size_t>(i) * n_ + j];
            if (v > 1) throw std::domain_error("adjacency entries must be 0/1");
            if (v != adj_[static_cast<size_t>(j) * n_ + i])
                throw std::domain_error("adjacency must be symmetric");
        }
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::string label) {
    if (n < 1) throw std::domain_error("graph needs at least one vertex");
    std::vector<uint8_t> adj(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::domain_error("edge endpoint out of range");
        if (u == v) throw std::domain_error("loops are not allowed");
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
    }
    return Graph(n, std::move(adj), std::move(label));
}

int Graph::degree(int x) const {
    int d = 0;
    for (int y = 0; y < n_; ++y) d += adj_[static_cast<size_t>(x) * n_ + y];
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int x = 0; x < n_; ++x) total += degree(x);
    return total / 2;
}

Graph Graph::with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
}

IntMat Graph::adjacency_matrix() const {
    IntMat a(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adjacent(i, j)) a(i, j) = 1;
    return a;
}

std::vector<int> Graph::neighbors(int x) const {
    std::vector<int> out;
    for (int y = 0; y < n_; ++y)
        if (adjacent(x, y)) out.push_back(y);
    return out;
}

Graph cycle(int n) {
    if (n < 3) throw std::domain_error("cycle(n) requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges, "cycle(" + std::to_string(n) + ")");
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges, "complete(" + std::to_string(n) + ")");
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::domain_error("complete_multipartite needs at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::domain_error("part sizes must be positive");
        n += p;
    }
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) part_of[v++] = static_cast<int>(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    std::ostringstream label;
    label << "complete_multipartite(";
    for (size_t p = 0; p < parts.size(); ++p) label << (p ? "," : "") << parts[p];
    label << ")";
    return Graph::from_edges(n, edges, label.str());
}

Graph hamming(int d, int q) {
    if (d < 1 || q < 1) throw std::domain_error("hamming(d,q) requires d >= 1 and q >= 1");
    int n = 1;
    for (int i = 0; i < d; ++i) {
        if (n > 1'000'000 / q) throw std::domain_error("hamming(d,q) too large");
        n *= q;
    }
    // Vertex index is the base-q value of its word, most significant digit first.
    auto digit = [&](int v, int pos) {
        for (int i = d - 1; i > pos; --i) v /= q;
        return v % q;
    };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            int diff = 0;
            for (int pos = 0; pos < d && diff < 2; ++pos)
                if (digit(u, pos) != digit(w, pos)) ++diff;
            if (diff == 1) edges.emplace_back(u, w);
        }
    return Graph::from_edges(n, edges,
                             "hamming(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

Graph circulant(int n, const std::vector<int>& connection) {
    if (n < 1) throw std::domain_error("cay(n;...) requires n >= 1");
    std::vector<int> sym;
    for (int s : connection) {
        int r = ((s % n) + n) % n;
        if (r == 0) throw std::domain_error("connection element 0 mod n is a loop");
        sym.push_back(r);
        sym.push_back(n - r);
    }
    std::sort(sym.begin(), sym.end());
    sym.erase(std::unique(sym.begin(), sym.end()), sym.end());
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int s : sym) edges.emplace_back(v, (v + s) % n);
    std::ostringstream label;
    label << "cay(" << n << ";";
    for (size_t i = 0; i < sym.size(); ++i) label << (i ? "," : "") << sym[i];
    label << ")";
    return Graph::from_edges(n, edges, label.str());
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> gedges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) gedges.emplace_back(u, v);
    if (gedges.empty()) throw std::domain_error("line graph of an edgeless graph is empty");
    int m = static_cast<int>(gedges.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = gedges[i];
            auto [c, d] = gedges[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    return Graph::from_edges(m, edges, "line(" + g.label() + ")");
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(g.n(), edges, "complement(" + g.label() + ")");
}

Graph coclique_extension(const Graph& g, int m) {
    if (m < 1) throw std::domain_error("coclique(g,m) requires m >= 1");
    int n = g.n() * m;
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
            if (g.adjacent(x, y))
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) edges.emplace_back(x * m + i, y * m + j);
    return Graph::from_edges(n, edges, "coclique(" + g.label() + "," + std::to_string(m) + ")");
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    int nb = b.n();
    int n = a.n() * nb;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < nb; ++v) {
            for (int w = v + 1; w < nb; ++w)
                if (b.adjacent(v, w)) edges.emplace_back(u * nb + v, u * nb + w);
            for (int t = u + 1; t < a.n(); ++t)
                if (a.adjacent(u, t)) edges.emplace_back(u * nb + v, t * nb + v);
        }
    return Graph::from_edges(n, edges, "cartesian(" + a.label() + "," + b.label() + ")");
}

BasicPredicates basic_predicates(const Graph& g) {
    BasicPredicates p;
    int n = g.n();
    int k = g.degree(0);
    bool regular = true;
    for (int v = 1; v < n && regular; ++v) regular = (g.degree(v) == k);
    if (regular) p.regular = k;

    p.complete = true;
    for (int u = 0; u < n && p.complete; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) {
                p.complete = false;
                break;
            }

    // Connectivity and 2-colorability in one BFS sweep per component.
    std::vector<int> color(n, -1);
    p.bipartite = true;
    int seen = 0, comps = 0;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        ++comps;
        color[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            ++seen;
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    bfs.push(v);
                } else if (color[v] == color[u]) {
                    p.bipartite = false;
                }
            }
        }
    }
    p.connected = (comps == 1) && (seen == n);
    return p;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.n();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::queue<int> bfs;
        bfs.push(s);
        comp[s] = count;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) && comp[v] == -1) {
                    comp[v] = count;
                    bfs.push(v);
                }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

std::vector<Arc> arcs(const Graph& g) {
    std::vector<Arc> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (g.adjacent(u, v)) out.push_back({u, v});
    return out; // already sorted by (origin, terminus)
}

Int count_triangles_through(const Graph& g, int x) {
    if (x < 0 || x >= g.n()) throw std::domain_error("vertex out of range");
    auto nbrs = g.neighbors(x);
    Int t = 0;
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) ++t;
    return t;
}

namespace {

Int binom2(const Int& m) { return m * (m - 1) / 2; }

QuadrangleCount quadrangles_brute(const Graph& g) {
    int n = g.n();
    QuadrangleCount out{0, std::vector<Int>(n, Int(0))};
    // Fix the three perfect pairings of {a,b,c,d} into two diagonals; each
    // C_4 subgraph is one pairing with all four rim edges present.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int hits = 0;
                    // cycle a-b-c-d
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) &&
                        g.adjacent(d, a))
                        ++hits;
                    // cycle a-b-d-c
                    if (g.adjacent(a, b) && g.adjacent(b, d) && g.adjacent(d, c) &&
                        g.adjacent(c, a))
                        ++hits;
                    // cycle a-c-b-d
                    if (g.adjacent(a, c) && g.adjacent(c, b) && g.adjacent(b, d) &&
                        g.adjacent(d, a))
                        ++hits;
                    if (hits) {
                        out.total += hits;
                        out.through[a] += hits;
                        out.through[b] += hits;
                        out.through[c] += hits;
                        out.through[d] += hits;
                    }
                }
    return out;
}

QuadrangleCount quadrangles_by_pairs(const Graph& g) {
    int n = g.n();
    QuadrangleCount out{0, std::vector<Int>(n, Int(0))};
    // A quadrangle through x has a unique opposite vertex w; the two rim
    // vertices are an unordered pair of common neighbours of {x, w}.
    for (int x = 0; x < n; ++x) {
        for (int w = 0; w < n; ++w) {
            if (w == x) continue;
            Int codeg = 0;
            for (int z = 0; z < n; ++z)
                if (g.adjacent(x, z) && g.adjacent(w, z)) ++codeg;
            out.through[x] += binom2(codeg);
        }
    }
    for (int x = 0; x < n; ++x) out.total += out.through[x];
    out.total /= 4; // each quadrangle passes through four vertices
    return out;
}

} // namespace

QuadrangleCount count_quadrangles(const Graph& g) {
    return g.n() <= 64 ? quadrangles_brute(g) : quadrangles_by_pairs(g);
}

std::vector<Int> walk_counts(const Graph& g, int x, long r) {
    if (x < 0 || x >= g.n()) throw std::domain_error("vertex out of range");
    if (r < 0) throw std::domain_error("walk length must be >= 0");
    std::vector<Int> row(g.n(), Int(0));
    row[x] = 1;
    for (long step = 0; step < r; ++step) {
        std::vector<Int> next(g.n(), Int(0));
        for (int u = 0; u < g.n(); ++u) {
            if (row[u] == 0) continue;
            for (int v = 0; v < g.n(); ++v)
                if (g.adjacent(u, v)) next[v] += row[u];
        }
        row = std::move(next);
    }
    return row;
}

} // namespace gwalk
