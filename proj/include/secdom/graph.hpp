#ifndef SECDOM_GRAPH_HPP
#define SECDOM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secdom/vertex_set.hpp"

namespace secdom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one VertexSet per vertex. The class maintains
/// symmetry and irreflexivity; every mutating call goes through add_edge.
class Graph {
public:
    explicit Graph(std::size_t order) : adj_(order) {
        if (order == 0) throw std::invalid_argument("graph order must be at least 1");
        if (order > kMaxOrder)
            throw std::invalid_argument("graph order " + std::to_string(order) + " exceeds width cap " +
                                        std::to_string(kMaxOrder));
    }

    Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
        for (auto [a, b] : edges) add_edge(a, b);
    }

    std::size_t order() const noexcept { return adj_.size(); }

    std::size_t size() const noexcept {
        std::size_t twice = 0;
        for (auto s : adj_) twice += s.size();
        return twice / 2;
    }

    VertexSet vertices() const noexcept { return VertexSet::prefix(order()); }

    /// Open neighbourhood N(v).
    VertexSet neighbors(Vertex v) const { return adj_.at(v); }
    /// Closed neighbourhood N[v].
    VertexSet closed_neighbors(Vertex v) const { return adj_.at(v).with(v); }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const { return adj_.at(a).contains(b); }

    void add_edge(Vertex a, Vertex b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        adj_[a].insert(b);
        adj_[b].insert(a);
    }

    /// Edges (a, b) with a < b, sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex a = 0; a < order(); ++a)
            for (Vertex b : adj_[a])
                if (a < b) out.emplace_back(a, b);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const {
        if (v >= order())
            throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(order()));
    }

    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------- families

inline Graph make_path(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path needs at least one vertex");
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph make_complete(std::size_t n) {
    if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

/// K_{m,n}: parts [0, m) and [m, m+n).
inline Graph make_complete_bipartite(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw std::invalid_argument("complete bipartite parts must be non-empty");
    Graph g(m + n);
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < n; ++b) g.add_edge(a, m + b);
    return g;
}

/// K_{1,leaves} with the centre at vertex 0.
inline Graph make_star(std::size_t leaves) {
    if (leaves == 0) throw std::invalid_argument("star needs at least one leaf");
    return make_complete_bipartite(1, leaves);
}

/// G(n, p) sample.
template <class Rng>
Graph make_random(std::size_t n, double p, Rng& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

/// Relabel so that vertex v of `g` becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != g.order()) throw std::invalid_argument("permutation length differs from graph order");
    Graph out(g.order());
    for (auto [a, b] : g.edges()) out.add_edge(perm[a], perm[b]);
    return out;
}

// -------------------------------------------------------------- predicates

inline std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

inline bool has_dominating_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order()) return true;
    return false;
}

inline bool is_complete(const Graph& g) {
    return g.size() * 2 == g.order() * (g.order() - 1);
}

inline bool is_connected(const Graph& g) {
    VertexSet seen = VertexSet::singleton(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

inline bool is_triangle_free(const Graph& g) {
    for (auto [a, b] : g.edges())
        if (g.neighbors(a).intersects(g.neighbors(b))) return false;
    return true;
}

/// Every edge of h is an edge of g; both on the same vertex set.
inline bool is_spanning_subgraph(const Graph& h, const Graph& g) {
    if (h.order() != g.order()) throw std::invalid_argument("spanning subgraph test needs equal orders");
    for (Vertex v = 0; v < h.order(); ++v)
        if (!h.neighbors(v).is_subset_of(g.neighbors(v))) return false;
    return true;
}

/// Subgraph induced on `keep`, relabelled in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (keep.empty()) throw std::invalid_argument("induced subgraph on the empty set");
    std::vector<Vertex> index(g.order(), 0);
    Vertex next = 0;
    for (Vertex v : keep) index[v] = next++;
    Graph out(keep.size());
    for (auto [a, b] : g.edges())
        if (keep.contains(a) && keep.contains(b)) out.add_edge(index[a], index[b]);
    return out;
}

}  // namespace secdom

#endif  // SECDOM_GRAPH_HPP
