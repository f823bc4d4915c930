#ifndef SECDOM_ORACLE_HPP
#define SECDOM_ORACLE_HPP

// Reference implementations for cross-checking the solvers. Nothing here
// calls into domination.hpp or solvers.hpp: membership is a std::vector<bool>,
// adjacency is read one pair at a time, and every subset is tried.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "secdom/graph.hpp"

namespace secdom::oracle {

inline constexpr std::size_t kMaxOrder = 20;

using Membership = std::vector<bool>;

inline Membership from_mask(std::size_t n, std::uint64_t mask) {
    Membership in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = (mask >> i) & 1U;
    return in;
}

inline bool dominates(const Graph& g, const Membership& in) {
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x) {
        bool covered = in[x];
        for (std::size_t y = 0; y < n && !covered; ++y) covered = in[y] && g.has_edge(x, y);
        if (!covered) return false;
    }
    return true;
}

inline bool secure(const Graph& g, const Membership& in) {
    if (!dominates(g, in)) return false;
    const std::size_t n = g.order();
    for (std::size_t u = 0; u < n; ++u) {
        if (in[u]) continue;
        bool defended = false;
        for (std::size_t v = 0; v < n && !defended; ++v) {
            if (!in[v] || !g.has_edge(u, v)) continue;
            Membership swapped = in;
            swapped[v] = false;
            swapped[u] = true;
            defended = dominates(g, swapped);
        }
        if (!defended) return false;
    }
    return true;
}

inline std::size_t popcount(std::uint64_t x) {
    std::size_t c = 0;
    for (; x; x >>= 1) c += x & 1U;
    return c;
}

template <class Pred>
std::size_t min_cardinality(const Graph& g, Pred pred) {
    const std::size_t n = g.order();
    if (n > kMaxOrder) throw std::invalid_argument("oracle supports order <= " + std::to_string(kMaxOrder));
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (popcount(mask) == k && pred(g, from_mask(n, mask))) return k;
    throw std::logic_error("unreachable: the full vertex set always qualifies");
}

/// γ_s(g) by trying every subset in increasing cardinality.
inline std::size_t min_secure(const Graph& g) { return min_cardinality(g, secure); }

/// γ(g) by trying every subset in increasing cardinality.
inline std::size_t min_dominating(const Graph& g) { return min_cardinality(g, dominates); }

/// All secure dominating sets of cardinality k, as bit masks in increasing
/// sorted-tuple order.
inline std::vector<std::uint64_t> secure_sets_of_size(const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    if (n > kMaxOrder) throw std::invalid_argument("oracle supports order <= " + std::to_string(kMaxOrder));
    std::vector<std::uint64_t> out;
    // Recursive tuple enumeration keeps the output in tuple order.
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == k) {
            std::uint64_t mask = 0;
            for (auto v : pick) mask |= std::uint64_t{1} << v;
            if (secure(g, from_mask(n, mask))) out.push_back(mask);
            return;
        }
        for (std::size_t v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace secdom::oracle

#endif  // SECDOM_ORACLE_HPP
