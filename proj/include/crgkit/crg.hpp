#pragma once

// Colored regularity graphs: a complete graph whose vertices are white or
// black and whose edges are white, black or gray.

#include <crgkit/errors.hpp>
#include <crgkit/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace crgkit {

enum class Color : std::uint8_t
{
    White = 0,
    Black = 1,
    Gray = 2,
};

inline auto flip(Color c) noexcept -> Color
{
    switch (c) {
    case Color::White: return Color::Black;
    case Color::Black: return Color::White;
    case Color::Gray: return Color::Gray;
    }
    return c;
}

inline auto color_char(Color c) noexcept -> char
{
    switch (c) {
    case Color::White: return 'w';
    case Color::Black: return 'b';
    case Color::Gray: return 'g';
    }
    return '?';
}

/// Marker for the infinite dalmatian D_inf (a single white vertex).
struct Infinity
{};
inline constexpr Infinity infinity_mark{};

class Crg
{
public:
    Crg() = default;

    /// All vertices `vertex`, all edges `edge`.
    explicit Crg(int n, Color vertex = Color::Black, Color edge = Color::Gray)
    {
        if (n < 0)
            throw InvalidInput("negative CRG order");
        if (vertex == Color::Gray)
            throw InvalidInput("vertices are white or black");
        vertices_.assign(static_cast<std::size_t>(n), vertex);
        edges_.assign(n > 0 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0, edge);
    }

    auto order() const noexcept -> int { return static_cast<int>(vertices_.size()); }

    auto vertex(int u) const -> Color { return vertices_[u]; }
    void set_vertex(int u, Color c)
    {
        if (c == Color::Gray)
            throw InvalidInput("vertices are white or black");
        vertices_.at(u) = c;
    }

    auto edge(int u, int v) const -> Color { return edges_[index(u, v)]; }
    void set_edge(int u, int v, Color c)
    {
        if (u == v || u < 0 || v < 0 || u >= order() || v >= order())
            throw InvalidInput("edge endpoints must be distinct vertices");
        edges_[index(u, v)] = c;
    }

    auto vertex_colors() const -> std::span<const Color> { return vertices_; }

    auto operator==(const Crg &) const -> bool = default;

private:
    // upper-triangular, row-major over pairs u < v
    auto index(int u, int v) const -> std::size_t
    {
        if (u > v)
            std::swap(u, v);
        const auto n = static_cast<std::size_t>(order());
        const auto uu = static_cast<std::size_t>(u);
        return uu * n - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
    }

    std::vector<Color> vertices_;
    std::vector<Color> edges_;
};

// ---------------------------------------------------------------------------

/// D_t: t black vertices, all edges white.
inline auto make_dalmatian(int t) -> Crg
{
    if (t < 1)
        throw InvalidInput("dalmatian D_t needs t >= 1");
    return Crg(t, Color::Black, Color::White);
}

/// D_inf: one white vertex.
inline auto make_dalmatian(Infinity) -> Crg { return Crg(1, Color::White); }

inline auto complement_crg(const Crg & k) -> Crg
{
    Crg out(k.order());
    for (int u = 0; u < k.order(); ++u) {
        out.set_vertex(u, flip(k.vertex(u)));
        for (int v = u + 1; v < k.order(); ++v)
            out.set_edge(u, v, flip(k.edge(u, v)));
    }
    return out;
}

/// Block-diagonal union; edges between different parts are gray.
inline auto disjoint_union(std::span<const Crg> parts) -> Crg
{
    if (parts.empty())
        throw InvalidInput("disjoint_union of an empty list");
    int total = 0;
    for (const auto & p : parts)
        total += p.order();
    Crg out(total);
    int offset = 0;
    for (const auto & p : parts) {
        for (int u = 0; u < p.order(); ++u) {
            out.set_vertex(offset + u, p.vertex(u));
            for (int v = u + 1; v < p.order(); ++v)
                out.set_edge(offset + u, offset + v, p.edge(u, v));
        }
        offset += p.order();
    }
    return out;
}

inline auto disjoint_union(std::initializer_list<Crg> parts) -> Crg
{
    return disjoint_union(std::span<const Crg>(parts.begin(), parts.size()));
}

/// k copies of J.
inline auto repeat(const Crg & j, int k) -> Crg
{
    if (k < 1)
        throw InvalidInput("repeat needs k >= 1");
    std::vector<Crg> parts(static_cast<std::size_t>(k), j);
    return disjoint_union(parts);
}

/// The CRG associated to a nonempty graph. For p <= 1/2 the vertices are
/// black and E(G) is white; for p > 1/2 the vertices are white and E(G) is
/// black. Non-edges are gray.
inline auto associated_crg(const Graph & g, double p) -> Crg
{
    if (g.edge_count() == 0)
        throw InvalidInput("associated_crg is defined only for graphs with at least one edge");
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput("p must lie in [0,1]");
    const bool low = p <= 0.5;
    Crg out(g.order(), low ? Color::Black : Color::White, Color::Gray);
    for (auto [u, v] : g.edges())
        out.set_edge(u, v, low ? Color::White : Color::Black);
    return out;
}

inline auto induced_sub_crg(const Crg & k, std::span<const int> keep) -> Crg
{
    Crg out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.set_vertex(static_cast<int>(i), k.vertex(keep[i]));
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            out.set_edge(static_cast<int>(i), static_cast<int>(j), k.edge(keep[i], keep[j]));
    }
    return out;
}

inline auto remove_vertex(const Crg & k, int u) -> Crg
{
    std::vector<int> keep;
    for (int v = 0; v < k.order(); ++v)
        if (v != u)
            keep.push_back(v);
    return induced_sub_crg(k, keep);
}

/// Graph on V(K) with an edge wherever K's edge is not gray.
inline auto underlying_graph(const Crg & k) -> Graph
{
    Graph g(k.order());
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            if (k.edge(u, v) != Color::Gray)
                g.add_edge(u, v);
    return g;
}

struct CrgComponentSplit
{
    std::vector<std::vector<int>> blocks;
};

/// Components of the underlying graph, each block sorted, blocks ordered by
/// smallest vertex.
inline auto components(const Crg & k) -> CrgComponentSplit
{
    // Plain union-find so CRGs larger than the bitset cap still work.
    std::vector<int> parent(static_cast<std::size_t>(k.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v)
            if (k.edge(u, v) != Color::Gray) {
                const int a = find(u), b = find(v);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
    CrgComponentSplit out;
    std::vector<int> slot(static_cast<std::size_t>(k.order()), -1);
    for (int u = 0; u < k.order(); ++u) {
        const int r = find(u);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.blocks.size());
            out.blocks.emplace_back();
        }
        out.blocks[slot[r]].push_back(u);
    }
    return out;
}

/// Is the CRG restricted to `block` a dalmatian (D_t or D_inf)?
inline auto is_dalmatian_block(const Crg & k, std::span<const int> block) -> bool
{
    if (block.size() == 1)
        return true;    // D_1 (black) or D_inf (white)
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (k.vertex(block[i]) != Color::Black)
            return false;
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (k.edge(block[i], block[j]) != Color::White)
                return false;
    }
    return true;
}

/// Membership in the family whose components are dalmatians (p < 1/2),
/// complements of dalmatians (p > 1/2) or single vertices (p = 1/2).
inline auto is_in_D_p(const Crg & k, double p) -> bool
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput("p must lie in [0,1]");
    const auto split = components(k);
    if (p == 0.5) {
        for (const auto & b : split.blocks)
            if (b.size() != 1)
                return false;
        return true;
    }
    const Crg view = p < 0.5 ? k : complement_crg(k);
    for (const auto & b : split.blocks)
        if (!is_dalmatian_block(view, b))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Induced sub-CRG containment

namespace detail {

    struct SubCrgSearch
    {
        const Crg & small;
        const Crg & big;
        std::vector<int> map;
        std::vector<bool> used;

        auto run(int i) -> bool
        {
            if (i == small.order())
                return true;
            for (int a = 0; a < big.order(); ++a) {
                if (used[a] || big.vertex(a) != small.vertex(i))
                    continue;
                bool ok = true;
                for (int j = 0; j < i && ok; ++j)
                    ok = big.edge(a, map[j]) == small.edge(i, j);
                if (!ok)
                    continue;
                map[i] = a;
                used[a] = true;
                if (run(i + 1))
                    return true;
                used[a] = false;
            }
            return false;
        }
    };

} // namespace detail

/// Injective colour-preserving map of `small` onto an induced sub-CRG of
/// `big`, if one exists.
inline auto find_sub_crg(const Crg & small, const Crg & big) -> std::optional<std::vector<int>>
{
    if (small.order() > big.order())
        return std::nullopt;
    detail::SubCrgSearch s{small, big, std::vector<int>(static_cast<std::size_t>(small.order()), -1),
                           std::vector<bool>(static_cast<std::size_t>(big.order()), false)};
    if (s.run(0))
        return s.map;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format:
//   line 1: n
//   line 2: vertex colours, n characters over {w,b}
//   lines 3..n+1: row u lists the colours of edges (u,u+1)..(u,n-1) over {w,b,g}

inline auto parse_crg(std::istream & in) -> Crg
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.push_back(line.substr(first));
    }
    if (lines.empty())
        throw ParseError("crg: missing vertex count");
    int n = 0;
    {
        std::istringstream ls(lines[0]);
        std::string rest;
        if (!(ls >> n) || n < 1 || (ls >> rest))
            throw ParseError("crg: first line must be a positive vertex count");
    }
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("crg: expected " + std::to_string(n + 1) + " non-empty lines, got "
                         + std::to_string(lines.size()));
    Crg k(n);
    if (static_cast<int>(lines[1].size()) != n)
        throw ParseError("crg: vertex colour line must have exactly n characters");
    for (int u = 0; u < n; ++u) {
        switch (lines[1][u]) {
        case 'w': k.set_vertex(u, Color::White); break;
        case 'b': k.set_vertex(u, Color::Black); break;
        default: throw ParseError(std::string("crg: bad vertex colour '") + lines[1][u] + "'");
        }
    }
    for (int u = 0; u + 1 < n; ++u) {
        const auto & row = lines[u + 2];
        if (static_cast<int>(row.size()) != n - 1 - u)
            throw ParseError("crg: edge row " + std::to_string(u) + " must have " + std::to_string(n - 1 - u)
                             + " characters");
        for (int v = u + 1; v < n; ++v) {
            switch (row[v - u - 1]) {
            case 'w': k.set_edge(u, v, Color::White); break;
            case 'b': k.set_edge(u, v, Color::Black); break;
            case 'g': k.set_edge(u, v, Color::Gray); break;
            default: throw ParseError(std::string("crg: bad edge colour '") + row[v - u - 1] + "'");
            }
        }
    }
    return k;
}

inline auto parse_crg(const std::string & text) -> Crg
{
    std::istringstream in(text);
    return parse_crg(in);
}

inline void write_crg(std::ostream & out, const Crg & k)
{
    out << k.order() << '\n';
    for (int u = 0; u < k.order(); ++u)
        out << color_char(k.vertex(u));
    out << '\n';
    for (int u = 0; u + 1 < k.order(); ++u) {
        for (int v = u + 1; v < k.order(); ++v)
            out << color_char(k.edge(u, v));
        out << '\n';
    }
}

inline auto render_crg(const Crg & k) -> std::string
{
    std::ostringstream out;
    write_crg(out, k);
    return out.str();
}

} // namespace crgkit
