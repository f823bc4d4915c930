#ifndef SECDOM_VERTEX_SET_HPP
#define SECDOM_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#ifndef SECDOM_MAX_ORDER
#define SECDOM_MAX_ORDER 64
#endif

namespace secdom {

/// Largest graph order representable. A VertexSet occupies one machine word.
inline constexpr std::size_t kMaxOrder = SECDOM_MAX_ORDER;
static_assert(kMaxOrder >= 1 && kMaxOrder <= 64, "SECDOM_MAX_ORDER must lie in [1, 64]");

using Vertex = std::size_t;

/// Subset of {0, ..., kMaxOrder-1} stored as a bit word.
class VertexSet {
public:
    using word_type = std::uint64_t;

    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(word_type bits) noexcept : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> members) noexcept {
        for (Vertex v : members) bits_ |= bit(v);
    }

    /// The set {0, ..., n-1}.
    static constexpr VertexSet prefix(std::size_t n) noexcept {
        return VertexSet(n >= 64 ? ~word_type{0} : ((word_type{1} << n) - 1));
    }
    static constexpr VertexSet singleton(Vertex v) noexcept { return VertexSet(bit(v)); }

    constexpr word_type bits() const noexcept { return bits_; }
    constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    /// Smallest member; undefined on the empty set.
    constexpr Vertex front() const noexcept { return static_cast<Vertex>(std::countr_zero(bits_)); }
    /// Largest member; undefined on the empty set.
    constexpr Vertex back() const noexcept { return static_cast<Vertex>(63 - std::countl_zero(bits_)); }

    constexpr VertexSet& insert(Vertex v) noexcept { bits_ |= bit(v); return *this; }
    constexpr VertexSet& erase(Vertex v) noexcept { bits_ &= ~bit(v); return *this; }

    constexpr VertexSet with(Vertex v) const noexcept { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(Vertex v) const noexcept { return VertexSet(bits_ & ~bit(v)); }

    constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(word_type rest) noexcept : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return static_cast<Vertex>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;

    private:
        word_type rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    std::vector<Vertex> members() const { return {begin(), end()}; }

    /// "{0,2,5}"
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (Vertex v : *this) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

private:
    static constexpr word_type bit(Vertex v) noexcept { return word_type{1} << v; }

    word_type bits_ = 0;
};

/// Order on sets: by cardinality, then by the sorted member tuple.
/// Within one cardinality this is the order in which the solvers visit subsets.
constexpr bool lex_less(VertexSet a, VertexSet b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto diff = a ^ b;
    if (diff.empty()) return false;
    return a.contains(diff.front());
}

}  // namespace secdom

#endif  // SECDOM_VERTEX_SET_HPP
