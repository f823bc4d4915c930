#ifndef SECDOM_DOMINATION_HPP
#define SECDOM_DOMINATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "secdom/graph.hpp"
#include "secdom/mycielskian.hpp"

namespace secdom {

/// N[s]: every vertex in s or adjacent to it.
inline VertexSet closed_cover(const Graph& g, VertexSet s) {
    VertexSet cover = s;
    for (Vertex v : s) cover |= g.neighbors(v);
    return cover;
}

inline bool is_dominating(const Graph& g, VertexSet s) {
    return closed_cover(g, s) == g.vertices();
}

/// External private neighbours of v with respect to s.
inline VertexSet epn(const Graph& g, Vertex v, VertexSet s) {
    if (!s.contains(v)) throw std::invalid_argument("epn: vertex " + std::to_string(v) + " is not in the set");
    VertexSet out;
    for (Vertex u : g.neighbors(v) - s)
        if ((g.neighbors(u) & s) == VertexSet::singleton(v)) out.insert(u);
    return out;
}

/// Members of s with no neighbour inside s.
inline VertexSet s_isolates(const Graph& g, VertexSet s) {
    VertexSet out;
    for (Vertex v : s)
        if (!g.neighbors(v).intersects(s)) out.insert(v);
    return out;
}

struct Defense {
    Vertex attacker;
    Vertex defender;
    friend bool operator==(const Defense&, const Defense&) = default;
};

/// A secure dominating set together with one valid defender per attacker.
struct SecureCertificate {
    VertexSet set;
    /// One entry per vertex outside `set`, in increasing attacker order.
    std::vector<Defense> defenses;
};

namespace detail {

// cover_without[k] is N[s \ {k-th member of s}], built from prefix and suffix unions.
class SwapTester {
public:
    SwapTester(const Graph& g, VertexSet s) : g_(g), s_(s), all_(g.vertices()) {
        members_ = s.members();
        const std::size_t k = members_.size();
        std::vector<VertexSet> prefix(k + 1), suffix(k + 1);
        for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] | g.closed_neighbors(members_[i]);
        for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] | g.closed_neighbors(members_[i]);
        full_cover_ = prefix[k];
        without_.resize(k);
        for (std::size_t i = 0; i < k; ++i) without_[i] = prefix[i] | suffix[i + 1];
    }

    bool dominating() const noexcept { return full_cover_ == all_; }

    /// Least-index defender v in s ∩ N(u) with (s - v) + u dominating.
    std::optional<Vertex> defender(Vertex u) const {
        const VertexSet reach = g_.closed_neighbors(u);
        for (std::size_t i = 0; i < members_.size(); ++i) {
            const Vertex v = members_[i];
            if (!g_.has_edge(u, v)) continue;
            if ((without_[i] | reach) == all_) return v;
        }
        return std::nullopt;
    }

private:
    const Graph& g_;
    VertexSet s_;
    VertexSet all_;
    VertexSet full_cover_;
    std::vector<Vertex> members_;
    std::vector<VertexSet> without_;
};

}  // namespace detail

/// Boolean form of is_secure_dominating without building the certificate.
inline bool is_secure(const Graph& g, VertexSet s) {
    const detail::SwapTester tester(g, s);
    if (!tester.dominating()) return false;
    for (Vertex u : g.vertices() - s)
        if (!tester.defender(u)) return false;
    return true;
}

/// Certificate if s is secure dominating. Defenders must be adjacent to
/// their attacker; ties go to the least index.
inline std::optional<SecureCertificate> is_secure_dominating(const Graph& g, VertexSet s) {
    const detail::SwapTester tester(g, s);
    if (!tester.dominating()) return std::nullopt;
    SecureCertificate cert{s, {}};
    for (Vertex u : g.vertices() - s) {
        auto d = tester.defender(u);
        if (!d) return std::nullopt;
        cert.defenses.push_back({u, *d});
    }
    return cert;
}

/// Re-check a certificate from scratch using only is_dominating.
inline bool replay_certificate(const Graph& g, const SecureCertificate& cert) {
    if (!cert.set.is_subset_of(g.vertices())) return false;
    if (!is_dominating(g, cert.set)) return false;
    VertexSet attacked;
    for (const auto& [u, d] : cert.defenses) {
        if (u >= g.order() || cert.set.contains(u) || attacked.contains(u)) return false;
        if (!cert.set.contains(d) || !g.has_edge(u, d)) return false;
        if (!is_dominating(g, cert.set.without(d).with(u))) return false;
        attacked.insert(u);
    }
    return attacked == g.vertices() - cert.set;
}

/// s ∪ {images of s-isolates} ∪ {w}, a secure dominating set of μ(g)
/// whenever s is one of g and g is connected with at least two vertices.
inline VertexSet lift_secure_set(const Graph& g, VertexSet s) {
    if (!is_secure(g, s)) throw std::invalid_argument("lift_secure_set: " + s.to_string() + " is not secure dominating");
    const MycielskianLabeling lab{g.order()};
    if (lab.order() > kMaxOrder) throw std::invalid_argument("lift_secure_set: Mycielskian exceeds width cap");
    return s | lab.images_of(s_isolates(g, s)) | VertexSet::singleton(lab.cone());
}

}  // namespace secdom

#endif  // SECDOM_DOMINATION_HPP
