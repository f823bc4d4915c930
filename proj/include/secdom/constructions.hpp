#ifndef SECDOM_CONSTRUCTIONS_HPP
#define SECDOM_CONSTRUCTIONS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "secdom/formulas.hpp"
#include "secdom/graph.hpp"

namespace secdom {

enum class ConstructionKind { gap_positive, gap_nonnegative, prescribed_values };

inline std::string_view to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::gap_positive: return "gap-positive";
        case ConstructionKind::gap_nonnegative: return "gap-nonneg";
        case ConstructionKind::prescribed_values: return "prescribed";
    }
    return "?";
}

/// Parameters and claimed (γ_s(G), γ_s(μ(G))) for a built graph.
struct ConstructionSpec {
    ConstructionKind kind;
    long k = 0;
    long a = 0;
    long b = 0;
    std::size_t expected_gamma_s = 0;
    std::size_t expected_gamma_s_mu = 0;
    /// Human-readable family, e.g. "P_14" or "K_{1,5}".
    std::string family;
};

struct Construction {
    Graph graph;
    ConstructionSpec spec;
};

/// Path order used for gap k: 3 when k = 1, 14k-26 for even k, 14k-28 for odd k >= 3.
constexpr std::size_t gap_positive_path_order(long k) {
    if (k < 1) throw std::invalid_argument("gap-positive construction needs k >= 1");
    if (k == 1) return 3;
    return static_cast<std::size_t>(k % 2 == 0 ? 14 * k - 26 : 14 * k - 28);
}

/// A path whose Mycielskian raises γ_s by exactly k.
inline Construction construct_gap_positive(long k) {
    const std::size_t n = gap_positive_path_order(k);
    ConstructionSpec spec{ConstructionKind::gap_positive, k, 0, 0, formulas::gamma_s_path(n),
                          formulas::gamma_s_mu_path(n), "P_" + std::to_string(n)};
    return {make_path(n), std::move(spec)};
}

/// K_{1,k+3}, whose Mycielskian lowers γ_s by exactly k.
inline Construction construct_gap_nonnegative(long k) {
    if (k < 0) throw std::invalid_argument("gap-nonneg construction needs k >= 0");
    const auto leaves = static_cast<std::size_t>(k + 3);
    ConstructionSpec spec{ConstructionKind::gap_nonnegative, k, 0, 0, leaves, 3,
                          "K_{1," + std::to_string(leaves) + "}"};
    return {make_star(leaves), std::move(spec)};
}

inline void check_prescribed_domain(long a, long b) {
    if (a < 2) throw std::invalid_argument("prescribed construction needs a >= 2");
    if (b == 2 * a || b == 2 * a + 1)
        throw std::invalid_argument("prescribed construction: b = 2a and b = 2a+1 are open cases, not supported");
    if (b < 3 || b > 2 * a - 1) throw std::invalid_argument("prescribed construction needs 3 <= b <= 2a-1");
}

/// A graph with γ_s(G) = a and γ_s(μ(G)) = b, for a >= 2 and 3 <= b <= 2a-1.
///
/// b > a: clique on b-a vertices, one subdivided leaf hanging from each
/// clique vertex and 2a-b-1 further subdivided leaves hanging from the first.
/// Layout: clique [0, b-a), then (l_i^0, l_i^1) pairs, then (m_j^0, m_j^1) pairs.
///
/// b <= a: path on b-2 vertices, one leaf per path vertex and a-b+2 further
/// leaves on the first. Layout: path, then l_i, then m_j.
///
/// Both cases have order a+b-2.
inline Construction construct_prescribed(long a, long b) {
    check_prescribed_domain(a, b);
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    Graph g(ua + ub - 2);
    std::string family;
    if (b > a) {
        const std::size_t clique = ub - ua;
        for (Vertex i = 0; i < clique; ++i)
            for (Vertex j = i + 1; j < clique; ++j) g.add_edge(i, j);
        Vertex next = clique;
        for (Vertex i = 0; i < clique; ++i, next += 2) {
            g.add_edge(i, next);
            g.add_edge(next, next + 1);
        }
        for (std::size_t j = 0; j + 1 < 2 * ua - ub; ++j, next += 2) {
            g.add_edge(0, next);
            g.add_edge(next, next + 1);
        }
        family = "K_" + std::to_string(clique) + " with subdivided leaves";
    } else {
        const std::size_t spine = ub - 2;
        for (Vertex i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
        Vertex next = spine;
        for (Vertex i = 0; i < spine; ++i) g.add_edge(i, next++);
        for (std::size_t j = 0; j < ua - ub + 2; ++j) g.add_edge(0, next++);
        family = "P_" + std::to_string(spine) + " with leaves";
    }
    ConstructionSpec spec{ConstructionKind::prescribed_values, 0, a, b, ua, ub, std::move(family)};
    return {std::move(g), std::move(spec)};
}

}  // namespace secdom

#endif  // SECDOM_CONSTRUCTIONS_HPP
