#ifndef SECDOM_GRAPH6_HPP
#define SECDOM_GRAPH6_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secdom/graph.hpp"

namespace secdom {

/// Malformed graph6 input. position() is the 0-based byte offset of the
/// offending byte within the (header-stripped) line, or the line length for
/// truncated payloads.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t position)
        : std::runtime_error("graph6: " + what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace graph6 {

inline constexpr std::uint64_t kMaxEncodableOrder = 68719476735ULL;  // 2^36 - 1
inline constexpr std::uint64_t kShortFormLimit = 62;
inline constexpr std::uint64_t kMediumFormLimit = 258047;
inline constexpr std::string_view kHeader = ">>graph6<<";

/// N(n): one byte for n <= 62, '~' plus three bytes up to 258047, "~~" plus
/// six bytes beyond.
inline std::string encode_order(std::uint64_t n) {
    std::string out;
    auto push_bits = [&](int groups) {
        for (int i = groups - 1; i >= 0; --i) out += static_cast<char>(((n >> (6 * i)) & 63U) + 63);
    };
    if (n <= kShortFormLimit) {
        out += static_cast<char>(n + 63);
    } else if (n <= kMediumFormLimit) {
        out += '~';
        push_bits(3);
    } else if (n <= kMaxEncodableOrder) {
        out += "~~";
        push_bits(6);
    } else {
        throw std::invalid_argument("order too large for graph6");
    }
    return out;
}

struct DecodedOrder {
    std::uint64_t order;
    std::size_t consumed;
};

inline std::uint8_t checked_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error("truncated input", text.size());
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("byte value " + std::to_string(c) + " outside [63,126]", pos);
    return static_cast<std::uint8_t>(c - 63);
}

inline DecodedOrder decode_order(std::string_view text) {
    auto read_groups = [&](std::size_t start, int groups) {
        std::uint64_t n = 0;
        for (int i = 0; i < groups; ++i) n = (n << 6) | checked_byte(text, start + i);
        return n;
    };
    const auto first = checked_byte(text, 0);
    if (first != 63) return {first, 1};
    if (text.size() > 1 && text[1] == '~') return {read_groups(2, 6), 8};
    return {read_groups(1, 3), 4};
}

/// Number of payload bytes for an order-n graph.
constexpr std::size_t payload_bytes(std::uint64_t n) {
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace graph6

/// Encode without header or trailing newline.
inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out = graph6::encode_order(n);
    std::uint8_t acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | (g.has_edge(i, j) ? 1U : 0U));
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

/// Decode one graph6 string. Accepts an optional ">>graph6<<" prefix and a
/// trailing "\n" or "\r\n". Rejects bytes outside [63,126], truncated or
/// over-long payloads, non-zero padding bits, and orders above the width cap.
inline Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(graph6::kHeader)) line.remove_prefix(graph6::kHeader.size());
    if (line.empty()) throw Graph6Error("empty input", 0);

    const auto [n, consumed] = graph6::decode_order(line);
    if (n == 0) throw Graph6Error("order 0 is not supported", 0);
    if (n > kMaxOrder)
        throw Graph6Error("order " + std::to_string(n) + " exceeds width cap " + std::to_string(kMaxOrder), 0);

    const std::size_t expected = consumed + graph6::payload_bytes(n);
    if (line.size() < expected) {
        // Report the first bad byte if there is one, otherwise the truncation point.
        for (std::size_t p = consumed; p < line.size(); ++p) graph6::checked_byte(line, p);
        throw Graph6Error("truncated payload: expected " + std::to_string(expected) + " bytes, got " +
                              std::to_string(line.size()),
                          line.size());
    }
    if (line.size() > expected) throw Graph6Error("trailing bytes after payload", expected);

    Graph g(static_cast<std::size_t>(n));
    std::size_t pos = consumed;
    std::uint8_t current = 0;
    int remaining = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (remaining == 0) {
                current = graph6::checked_byte(line, pos++);
                remaining = 6;
            }
            --remaining;
            if ((current >> remaining) & 1U) g.add_edge(i, j);
        }
    }
    if (remaining > 0 && (current & ((1U << remaining) - 1)) != 0)
        throw Graph6Error("non-zero padding bits", pos - 1);
    return g;
}

/// One graph per non-empty line; errors carry the 1-based line number.
class Graph6LineError : public std::runtime_error {
public:
    Graph6LineError(std::size_t line, const Graph6Error& cause)
        : std::runtime_error("line " + std::to_string(line) + ": " + cause.what()),
          line_(line),
          position_(cause.position()) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t line_;
    std::size_t position_;
};

inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6LineError(number, e);
        }
    }
    return out;
}

}  // namespace secdom

#endif  // SECDOM_GRAPH6_HPP
