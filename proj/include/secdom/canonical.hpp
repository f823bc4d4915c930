#ifndef SECDOM_CANONICAL_HPP
#define SECDOM_CANONICAL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "secdom/graph.hpp"
#include "secdom/graph6.hpp"

namespace secdom {

/// Largest order accepted by canonical_form and enumerate_graphs.
inline constexpr std::size_t kCanonicalCap = 7;

struct CanonicalForm {
    /// graph6 string of the canonically relabelled graph.
    std::string key;
    /// order[p] is the original vertex placed at canonical position p.
    std::vector<Vertex> order;
};

namespace detail {

// Branch-and-bound over vertex orders. The encoding is compared column by
// column (column j holds the adjacency of position j to positions 0..j-1,
// most significant bit first), which is exactly graph6 byte order.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.order()), cur_(n_), best_col_(n_, kUnset), best_order_(n_) {}

    CanonicalForm run() {
        place(0, g_.vertices());
        Graph canon(n_);
        for (Vertex p = 0; p < n_; ++p)
            for (Vertex q = p + 1; q < n_; ++q)
                if (g_.has_edge(best_order_[p], best_order_[q])) canon.add_edge(p, q);
        return {to_graph6(canon), best_order_};
    }

private:
    static constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

    void place(std::size_t depth, VertexSet unused) {
        if (depth == n_) {
            best_order_ = cur_;
            return;
        }
        for (Vertex v : unused) {
            std::uint64_t col = 0;
            for (std::size_t i = 0; i < depth; ++i) col = (col << 1) | (g_.has_edge(cur_[i], v) ? 1U : 0U);
            if (col > best_col_[depth]) continue;
            if (col < best_col_[depth]) {
                best_col_[depth] = col;
                for (std::size_t k = depth + 1; k < n_; ++k) best_col_[k] = kUnset;
            }
            cur_[depth] = v;
            place(depth + 1, unused.without(v));
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> cur_;
    std::vector<std::uint64_t> best_col_;
    std::vector<Vertex> best_order_;
};

}  // namespace detail

/// Isomorphism-invariant key: the least adjacency encoding over all vertex orders.
inline CanonicalForm canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw std::invalid_argument("canonical form supports order <= " + std::to_string(kCanonicalCap) +
                                    ", got " + std::to_string(g.order()));
    return detail::CanonicalSearch(g).run();
}

inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).key; }

/// One representative per isomorphism class on n vertices, each in its
/// canonical labeling, ordered by canonical key.
///
/// Classes on n vertices are grown from the classes on n-1 vertices by
/// adding a vertex with every possible neighbourhood.
inline std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
    if (n == 0) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > kCanonicalCap)
        throw std::invalid_argument("enumerate_graphs supports n <= " + std::to_string(kCanonicalCap) +
                                    "; feed larger orders as a graph6 stream (e.g. from nauty geng)");
    std::map<std::string, Graph> layer{{canonical_form(Graph(1)), Graph(1)}};
    for (std::size_t order = 2; order <= n; ++order) {
        std::map<std::string, Graph> next;
        const Vertex fresh = order - 1;
        for (const auto& [key, base] : layer) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fresh); ++mask) {
                Graph g(order, base.edges());
                for (Vertex v : VertexSet(mask)) g.add_edge(v, fresh);
                auto canon = canonical_form(g);
                if (!next.contains(canon)) next.emplace(canon, from_graph6(canon));
            }
        }
        layer = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : layer)
        if (!connected_only || is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace secdom

#endif  // SECDOM_CANONICAL_HPP
