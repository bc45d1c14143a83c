#include "genergy/graph6.hpp"

#include <vector>

#include "genergy/errors.hpp"

namespace genergy {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bits = 0;
    int group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                bits = 0;
                group = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    auto value = [&](std::size_t pos) {
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) {
            throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126", pos);
        }
        return c - 63;
    };
    const int n = value(0);
    if (n == 63) throw CapacityError("multi-byte graph6 size header; order exceeds 62");
    if (n > Graph::kMaxVertices) {
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds limit of " +
                            std::to_string(Graph::kMaxVertices));
    }
    const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (pair_count + 5) / 6;
    if (text.size() < 1 + body) throw ParseError("graph6 string truncated", text.size());
    if (text.size() > 1 + body) throw ParseError("trailing bytes after graph6 body", 1 + body);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = value(1 + bit / 6);
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (body > 0 && bit % 6 != 0) {
        const int group = value(body);
        const int pad_bits = 6 - static_cast<int>(bit % 6);
        if ((group & ((1 << pad_bits) - 1)) != 0) {
            throw ParseError("nonzero padding bits in final graph6 byte", body);
        }
    }
    return Graph::from_edges(n, edges);
}

bool looks_like_graph6(std::string_view text) noexcept {
    if (text.empty()) return false;
    for (char ch : text) {
        const int c = static_cast<unsigned char>(ch);
        if (c < 63 || c > 126) return false;
    }
    return true;
}

}  // namespace genergy
