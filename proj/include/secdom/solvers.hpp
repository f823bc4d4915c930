#ifndef SECDOM_SOLVERS_HPP
#define SECDOM_SOLVERS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "secdom/domination.hpp"
#include "secdom/graph.hpp"

namespace secdom {

enum class Parameter { domination, secure_domination };

inline std::string_view to_string(Parameter p) {
    return p == Parameter::domination ? "gamma" : "gamma_s";
}

struct SolveResult {
    Parameter kind = Parameter::domination;
    std::size_t value = 0;
    /// Least optimum in (cardinality, sorted tuple) order.
    VertexSet witness;
    /// Every level below `value` was searched exhaustively without success.
    bool exhausted_below = false;
    /// Dominating candidates examined across all levels.
    std::uint64_t candidates = 0;
};

struct SolveOptions {
    /// Worker threads splitting each level by first member. 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Largest order for which the inclusion-minimal enumeration is offered.
inline constexpr std::size_t kInclusionMinimalCap = 24;

namespace detail {

// Enumerates k-subsets in lexicographic order of their sorted member tuples,
// visiting only dominating ones. A branch is cut when some vertex whose
// closed neighbourhood lies entirely below the next candidate index is still
// uncovered, or when the uncovered count exceeds what the remaining picks
// can reach.
class DominatingSubsets {
public:
    explicit DominatingSubsets(const Graph& g) : n_(g.order()), all_(g.vertices()), need_by_(n_ + 1) {
        for (Vertex v = 0; v < n_; ++v) {
            const Vertex top = g.closed_neighbors(v).back();
            for (std::size_t i = top + 1; i <= n_; ++i) need_by_[i].insert(v);
        }
        reach_ = max_degree(g) + 1;
        closed_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) closed_.push_back(g.closed_neighbors(v));
    }

    std::size_t order() const noexcept { return n_; }

    /// Visits dominating k-subsets whose least member lies in [first_lo, first_hi).
    /// The visitor returns true to stop. Returns true iff stopped.
    template <class Visit>
    bool visit(std::size_t k, std::size_t first_lo, std::size_t first_hi, Visit&& fn) const {
        if (k == 0 || k > n_) return false;
        first_hi = std::min(first_hi, n_ - k + 1);
        for (std::size_t i = first_lo; i < first_hi; ++i) {
            if (!need_by_[i].is_subset_of(VertexSet{})) break;
            if (descend(i + 1, k - 1, VertexSet::singleton(i), closed_[i], fn)) return true;
        }
        return false;
    }

    template <class Visit>
    bool visit(std::size_t k, Visit&& fn) const {
        return visit(k, 0, n_, fn);
    }

private:
    template <class Visit>
    bool descend(std::size_t start, std::size_t left, VertexSet chosen, VertexSet cover, Visit& fn) const {
        if (left == 0) return cover == all_ && fn(chosen);
        if ((all_ - cover).size() > left * reach_) return false;
        for (std::size_t i = start; i + left <= n_; ++i) {
            if (!need_by_[i].is_subset_of(cover)) break;
            if (descend(i + 1, left - 1, chosen.with(i), cover | closed_[i], fn)) return true;
        }
        return false;
    }

    std::size_t n_;
    VertexSet all_;
    std::vector<VertexSet> need_by_;
    std::vector<VertexSet> closed_;
    std::size_t reach_ = 1;
};

// Least accepted k-subset, searching first-member ranges on several workers.
// The winner is the success with the smallest first member, and within that
// the first one met in sequential order, so the result does not depend on
// scheduling.
template <class Accept>
std::optional<VertexSet> first_accepted(const DominatingSubsets& subsets, std::size_t k, unsigned threads,
                                        const Accept& accept, std::uint64_t& candidates) {
    const std::size_t n = subsets.order();
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    if (threads == 1 || k < 2 || n < 8) {
        std::optional<VertexSet> found;
        subsets.visit(k, [&](VertexSet s) {
            ++candidates;
            if (!accept(s)) return false;
            found = s;
            return true;
        });
        return found;
    }

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next_first{0};
    std::atomic<std::size_t> best_first{kNone};
    std::atomic<std::uint64_t> visited{0};
    std::vector<std::optional<VertexSet>> per_first(n);
    std::mutex mu;

    auto worker = [&] {
        std::uint64_t local = 0;
        for (;;) {
            const std::size_t f = next_first.fetch_add(1);
            if (f >= n || f > best_first.load()) break;
            std::optional<VertexSet> found;
            subsets.visit(k, f, f + 1, [&](VertexSet s) {
                ++local;
                if (f > best_first.load(std::memory_order_relaxed)) return true;
                if (!accept(s)) return false;
                found = s;
                return true;
            });
            if (found) {
                std::lock_guard lock(mu);
                per_first[f] = found;
                std::size_t cur = best_first.load();
                while (f < cur && !best_first.compare_exchange_weak(cur, f)) {
                }
            }
        }
        visited += local;
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    candidates += visited.load();
    const std::size_t f = best_first.load();
    if (f == kNone) return std::nullopt;
    return per_first[f];
}

template <class Accept>
SolveResult solve_by_levels(const Graph& g, Parameter kind, const SolveOptions& opts, const Accept& accept) {
    const DominatingSubsets subsets(g);
    SolveResult result{kind, 0, {}, true, 0};
    for (std::size_t k = 1; k <= g.order(); ++k) {
        if (auto hit = first_accepted(subsets, k, opts.threads, accept, result.candidates)) {
            result.value = k;
            result.witness = *hit;
            return result;
        }
    }
    throw std::logic_error("no solution found; the full vertex set always qualifies");
}

}  // namespace detail

/// Exact γ(g) with the least minimum dominating set.
inline SolveResult min_dominating(const Graph& g, const SolveOptions& opts = {}) {
    return detail::solve_by_levels(g, Parameter::domination, opts, [](VertexSet) { return true; });
}

/// Exact γ_s(g) with the least minimum secure dominating set.
inline SolveResult min_secure_dominating(const Graph& g, const SolveOptions& opts = {}) {
    return detail::solve_by_levels(g, Parameter::secure_domination, opts,
                                   [&g](VertexSet s) { return is_secure(g, s); });
}

inline SolveResult solve(const Graph& g, Parameter kind, const SolveOptions& opts = {}) {
    return kind == Parameter::domination ? min_dominating(g, opts) : min_secure_dominating(g, opts);
}

/// Calls fn on each dominating k-subset in lexicographic order; fn returns true to stop.
inline void for_each_dominating_set(const Graph& g, std::size_t k, const std::function<bool(VertexSet)>& fn) {
    detail::DominatingSubsets(g).visit(k, fn);
}

/// Every minimum secure dominating set, lexicographically ordered.
inline std::vector<VertexSet> all_min_secure_sets(const Graph& g, const SolveOptions& opts = {}) {
    const auto best = min_secure_dominating(g, opts);
    std::vector<VertexSet> out;
    detail::DominatingSubsets(g).visit(best.value, [&](VertexSet s) {
        if (is_secure(g, s)) out.push_back(s);
        return false;
    });
    return out;
}

/// Secure dominating sets none of whose proper subsets is secure
/// dominating, ordered by cardinality then lexicographically.
///
/// Supersets of secure dominating sets are secure dominating, so it is
/// enough to test the single-vertex deletions.
inline std::vector<VertexSet> all_inclusion_minimal_secure_sets(const Graph& g) {
    if (g.order() > kInclusionMinimalCap)
        throw std::invalid_argument("inclusion-minimal enumeration supports order <= " +
                                    std::to_string(kInclusionMinimalCap));
    const detail::DominatingSubsets subsets(g);
    std::vector<VertexSet> out;
    for (std::size_t k = 1; k <= g.order(); ++k) {
        subsets.visit(k, [&](VertexSet s) {
            if (!is_secure(g, s)) return false;
            for (Vertex v : s)
                if (is_secure(g, s.without(v))) return false;
            out.push_back(s);
            return false;
        });
    }
    return out;
}

}  // namespace secdom

#endif  // SECDOM_SOLVERS_HPP
