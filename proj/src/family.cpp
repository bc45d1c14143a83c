#include "genergy/family.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

[[noreturn]] void invalid(const std::string& family, const std::string& bound) {
    throw InvalidFamilyError(family + ": requires " + bound);
}

std::string name_of(const char* head, int a) { return std::string(head) + "(" + std::to_string(a) + ")"; }
std::string name_of(const char* head, int a, int b) {
    return std::string(head) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

FamilyLayout s_layout(int n, int e) {
    const std::string name = name_of("S", n, e);
    if (n < 3) invalid(name, "n >= 3");
    if (e < n - 1) invalid(name, "e >= n-1");
    if (e > 2 * n - 3) invalid(name, "e <= 2n-3");
    FamilyLayout out{n, {}};
    for (int v = 1; v < n; ++v) out.edges.emplace_back(0, v);
    for (int v = 2; v < e - n + 3; ++v) out.edges.emplace_back(1, v);
    return out;
}

FamilyLayout b_layout(int n, int e) {
    const std::string name = name_of("B", n, e);
    if (n < 3) invalid(name, "n >= 3");
    if (e < n - 1) invalid(name, "e >= n-1");
    if (e > 2 * (n - 2)) invalid(name, "e <= 2(n-2)");
    FamilyLayout out{n, {}};
    for (int w = 2; w < n; ++w) out.edges.emplace_back(0, w);
    const int extra = e - (n - 2);
    for (int w = 2; w < 2 + extra; ++w) out.edges.emplace_back(1, w);
    return out;
}

FamilyLayout star_layout(int n) {
    if (n < 1) invalid(name_of("Star", n), "n >= 1");
    FamilyLayout out{n, {}};
    for (int v = 1; v < n; ++v) out.edges.emplace_back(0, v);
    return out;
}

FamilyLayout cycle_layout(int k) {
    if (k < 3) invalid(name_of("C", k), "k >= 3");
    FamilyLayout out{k, {}};
    for (int v = 0; v < k; ++v) out.edges.emplace_back(v, (v + 1) % k);
    return out;
}

FamilyLayout complete_layout(int k) {
    if (k < 1) invalid(name_of("K", k), "k >= 1");
    FamilyLayout out{k, {}};
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) out.edges.emplace_back(u, v);
    }
    return out;
}

FamilyLayout complete_bipartite_layout(int a, int b) {
    if (a < 1 || b < 1) invalid(name_of("Kb", a, b), "a >= 1 and b >= 1");
    FamilyLayout out{a + b, {}};
    for (int u = 0; u < a; ++u) {
        for (int v = a; v < a + b; ++v) out.edges.emplace_back(u, v);
    }
    return out;
}

FamilyLayout wheel_layout(int k) {
    if (k < 4) invalid(name_of("W", k), "k >= 4");
    FamilyLayout out{k, {}};
    const int rim = k - 1;
    for (int i = 0; i < rim; ++i) {
        out.edges.emplace_back(0, 1 + i);
        out.edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return out;
}

Graph to_graph(const FamilyLayout& layout) {
    if (layout.n > Graph::kMaxVertices) {
        throw CapacityError("family member has " + std::to_string(layout.n) + " vertices, limit is " +
                            std::to_string(Graph::kMaxVertices));
    }
    return Graph::from_edges(layout.n, layout.edges);
}

}  // namespace

FamilyLayout family_layout(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    auto arity = [&](std::size_t count) {
        if (spec.params.size() != count) {
            throw InvalidFamilyError(to_string(spec) + ": expected " + std::to_string(count) +
                                     " parameter(s)");
        }
    };
    const std::vector<int>& p = spec.params;
    switch (spec.kind) {
        case Kind::Star: arity(1); return star_layout(p[0]);
        case Kind::SGraph: arity(2); return s_layout(p[0], p[1]);
        case Kind::BGraph: arity(2); return b_layout(p[0], p[1]);
        case Kind::Cycle: arity(1); return cycle_layout(p[0]);
        case Kind::Complete: arity(1); return complete_layout(p[0]);
        case Kind::CompleteBipartite: arity(2); return complete_bipartite_layout(p[0], p[1]);
        case Kind::Wheel: arity(1); return wheel_layout(p[0]);
        case Kind::DisjointUnion: {
            if (spec.parts.empty()) throw InvalidFamilyError("empty disjoint union");
            FamilyLayout out;
            for (const FamilySpec& part : spec.parts) {
                const FamilyLayout piece = family_layout(part);
                for (const Edge& ed : piece.edges) out.edges.emplace_back(ed.u + out.n, ed.v + out.n);
                out.n += piece.n;
            }
            return out;
        }
    }
    throw InvalidFamilyError("unknown family kind");
}

Graph make_s_graph(int n, int e) { return to_graph(s_layout(n, e)); }
Graph make_b_graph(int n, int e) { return to_graph(b_layout(n, e)); }
Graph make_star(int n) { return to_graph(star_layout(n)); }
Graph make_cycle(int k) { return to_graph(cycle_layout(k)); }
Graph make_complete(int k) { return to_graph(complete_layout(k)); }
Graph make_complete_bipartite(int a, int b) { return to_graph(complete_bipartite_layout(a, b)); }
Graph make_wheel(int k) { return to_graph(wheel_layout(k)); }
Graph make_named(const FamilySpec& spec) { return to_graph(family_layout(spec)); }

namespace {

struct Token {
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text, std::size_t base) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalpha(c)) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({std::string(text.substr(i, j - i)), base + i});
            i = j;
        } else if (std::isdigit(c) || c == '-') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({std::string(text.substr(i, j - i)), base + i});
            i = j;
        } else {
            throw ParseError(std::string("unexpected character '") + text[i] + "'", base + i);
        }
    }
    return out;
}

FamilySpec parse_term(std::string_view text, std::size_t base) {
    const std::vector<Token> tokens = tokenize(text, base);
    if (tokens.empty()) throw ParseError("empty family term", base);
    const Token& head = tokens.front();

    std::vector<int> params;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        int value = 0;
        const std::string& t = tokens[i].text;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc{} || ptr != t.data() + t.size()) {
            throw ParseError("expected integer, got '" + t + "'", tokens[i].offset);
        }
        params.push_back(value);
    }

    using Kind = FamilySpec::Kind;
    struct Entry {
        const char* name;
        Kind kind;
        std::size_t arity;
    };
    static constexpr Entry kEntries[] = {
        {"S", Kind::SGraph, 2},   {"B", Kind::BGraph, 2}, {"C", Kind::Cycle, 1},  {"K", Kind::Complete, 1},
        {"Kb", Kind::CompleteBipartite, 2}, {"W", Kind::Wheel, 1}, {"Star", Kind::Star, 1},
    };
    for (const Entry& entry : kEntries) {
        if (head.text != entry.name) continue;
        if (params.size() != entry.arity) {
            throw ParseError("'" + head.text + "' takes " + std::to_string(entry.arity) + " parameter(s), got " +
                                 std::to_string(params.size()),
                             head.offset);
        }
        return FamilySpec{entry.kind, std::move(params), {}};
    }
    throw ParseError("unknown family '" + head.text + "'", head.offset);
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
    std::vector<FamilySpec> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = text.find('+', start);
        const std::size_t end = plus == std::string_view::npos ? text.size() : plus;
        parts.push_back(parse_term(text.substr(start, end - start), start));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    if (parts.size() == 1) return std::move(parts.front());
    return FamilySpec::disjoint_union(std::move(parts));
}

std::string to_string(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    if (spec.kind == Kind::DisjointUnion) {
        std::string out;
        for (std::size_t i = 0; i < spec.parts.size(); ++i) {
            if (i > 0) out += " + ";
            out += to_string(spec.parts[i]);
        }
        return out;
    }
    std::string out;
    switch (spec.kind) {
        case Kind::Star: out = "Star"; break;
        case Kind::SGraph: out = "S"; break;
        case Kind::BGraph: out = "B"; break;
        case Kind::Cycle: out = "C"; break;
        case Kind::Complete: out = "K"; break;
        case Kind::CompleteBipartite: out = "Kb"; break;
        case Kind::Wheel: out = "W"; break;
        case Kind::DisjointUnion: break;
    }
    for (int p : spec.params) out += " " + std::to_string(p);
    return out;
}

}  // namespace genergy
