#ifndef SECDOM_FORMULAS_HPP
#define SECDOM_FORMULAS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "secdom/domination.hpp"
#include "secdom/graph.hpp"
#include "secdom/solvers.hpp"

namespace secdom::formulas {

/// γ_s(P_n) = γ_s(C_n) = ⌈3n/7⌉.
constexpr std::size_t gamma_s_path(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gamma_s_path needs n >= 1");
    return (3 * n + 6) / 7;
}

constexpr std::size_t gamma_s_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("gamma_s_cycle needs n >= 3");
    return gamma_s_path(n);
}

/// γ_s(μ(P_n)) = γ_s(μ(C_n)); by n mod 4 with n = 4k + r:
/// r=0 -> 2k+1, r=1 -> 2k+2, r=2,3 -> 2k+3.
/// n = 1 gives 2, the value for μ(K_1).
constexpr std::size_t gamma_s_mu_path(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gamma_s_mu_path needs n >= 1");
    if (n == 1) return 2;
    const std::size_t k = n / 4;
    switch (n % 4) {
        case 0: return 2 * k + 1;
        case 1: return 2 * k + 2;
        default: return 2 * k + 3;
    }
}

constexpr std::size_t gamma_s_mu_cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("gamma_s_mu_cycle needs n >= 3");
    return gamma_s_mu_path(n);
}

constexpr void check_bipartite_order(std::size_t m, std::size_t n) {
    if (m == 0) throw std::invalid_argument("complete bipartite parts must be non-empty");
    if (m > n) throw std::invalid_argument("complete bipartite formulas need m <= n (smaller part first)");
}

/// γ_s(K_{m,n}) for m <= n.
constexpr std::size_t gamma_s_complete_bipartite(std::size_t m, std::size_t n) {
    check_bipartite_order(m, n);
    if (m == 1) return n;
    if (m <= 3) return m;
    return 4;
}

/// γ_s(μ(K_{m,n})) for m <= n, as tabulated: 3, then 4 for m in {2,3}, then 5.
constexpr std::size_t gamma_s_mu_complete_bipartite(std::size_t m, std::size_t n) {
    check_bipartite_order(m, n);
    if (m == 1) return 3;
    if (m <= 3) return 4;
    return 5;
}

enum class Family { path, cycle, mu_path, mu_cycle, complete, complete_bipartite, mu_complete_bipartite };

struct FamilyValue {
    Family family;
    /// Smaller part for the bipartite families, unused otherwise.
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t value = 0;
};

/// Closed-form γ_s for a family member. Bipartite families read (m, n).
constexpr FamilyValue family_value(Family f, std::size_t n, std::size_t m = 0) {
    FamilyValue out{f, m, n, 0};
    switch (f) {
        case Family::path: out.value = gamma_s_path(n); break;
        case Family::cycle: out.value = gamma_s_cycle(n); break;
        case Family::mu_path: out.value = gamma_s_mu_path(n); break;
        case Family::mu_cycle: out.value = gamma_s_mu_cycle(n); break;
        case Family::complete:
            if (n == 0) throw std::invalid_argument("complete graph needs n >= 1");
            out.value = 1;
            break;
        case Family::complete_bipartite: out.value = gamma_s_complete_bipartite(m, n); break;
        case Family::mu_complete_bipartite: out.value = gamma_s_mu_complete_bipartite(m, n); break;
    }
    return out;
}

/// Upper bound 2γ(g)+1 on γ_s(μ(g)).
inline std::size_t bound_two_gamma_plus_one(const Graph& g) {
    return 2 * min_dominating(g).value + 1;
}

/// Upper bound |s| + |isolates of s| + 1 on γ_s(μ(g)) for a secure dominating s.
inline std::size_t bound_isolates(const Graph& g, VertexSet s) {
    if (!is_secure(g, s)) throw std::invalid_argument("bound_isolates: " + s.to_string() + " is not secure dominating");
    return s.size() + s_isolates(g, s).size() + 1;
}

/// γ(μ(g)) predicted as γ(g)+1.
inline std::size_t gamma_mu_expected(const Graph& g) {
    return min_dominating(g).value + 1;
}

}  // namespace secdom::formulas

#endif  // SECDOM_FORMULAS_HPP
