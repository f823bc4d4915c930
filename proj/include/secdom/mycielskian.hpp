#ifndef SECDOM_MYCIELSKIAN_HPP
#define SECDOM_MYCIELSKIAN_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "secdom/graph.hpp"

namespace secdom {

/// Index layout of a Mycielskian built from a base graph of order n:
/// base vertex v_i keeps index i, its image u_i sits at n+i, and the cone
/// vertex w is 2n.
struct MycielskianLabeling {
    std::size_t base_order = 0;

    constexpr std::size_t order() const noexcept { return 2 * base_order + 1; }
    constexpr Vertex base(Vertex i) const noexcept { return i; }
    constexpr Vertex image(Vertex i) const noexcept { return base_order + i; }
    constexpr Vertex cone() const noexcept { return 2 * base_order; }

    constexpr bool is_base(Vertex x) const noexcept { return x < base_order; }
    constexpr bool is_image(Vertex x) const noexcept { return x >= base_order && x < 2 * base_order; }

    /// Preimage index for an image vertex.
    constexpr Vertex preimage(Vertex x) const noexcept { return x - base_order; }

    VertexSet base_block() const noexcept { return VertexSet::prefix(base_order); }
    VertexSet image_block() const noexcept { return VertexSet::prefix(2 * base_order) - base_block(); }

    /// { u_i : v_i in s }.
    VertexSet images_of(VertexSet s) const noexcept {
        return VertexSet(s.bits() << base_order);
    }

    /// "v3", "u3" or "w", 1-indexed like the usual drawings.
    std::string name(Vertex x) const {
        if (is_base(x)) return "v" + std::to_string(x + 1);
        if (is_image(x)) return "u" + std::to_string(preimage(x) + 1);
        return "w";
    }
};

/// The Mycielskian μ(G): G, plus an image u_i adjacent to N(v_i), plus a
/// cone vertex w adjacent to every image.
inline std::pair<Graph, MycielskianLabeling> mycielskian(const Graph& g) {
    const MycielskianLabeling lab{g.order()};
    if (lab.order() > kMaxOrder)
        throw std::invalid_argument("Mycielskian of order " + std::to_string(lab.order()) +
                                    " exceeds width cap " + std::to_string(kMaxOrder));
    Graph out(lab.order());
    for (auto [a, b] : g.edges()) {
        out.add_edge(lab.base(a), lab.base(b));
        out.add_edge(lab.image(a), lab.base(b));
        out.add_edge(lab.base(a), lab.image(b));
    }
    for (Vertex i = 0; i < g.order(); ++i) out.add_edge(lab.image(i), lab.cone());
    return {std::move(out), lab};
}

/// Shorthand when the labeling is implied.
inline Graph mycielski_graph(const Graph& g) { return mycielskian(g).first; }

}  // namespace secdom

#endif  // SECDOM_MYCIELSKIAN_HPP
