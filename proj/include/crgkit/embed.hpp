#pragma once

// F |-> K: a map V(F) -> V(K) such that
//   * an edge of F goes to one black vertex, or to a black or gray edge;
//   * a non-edge of F goes to one white vertex, or to a white or gray edge.

#include <crgkit/crg.hpp>
#include <crgkit/dalmatian.hpp>
#include <crgkit/errors.hpp>
#include <crgkit/graph.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace crgkit {

using Embedding = std::vector<int>;

/// Does `phi` satisfy the embedding conditions?
inline auto is_embedding(const Graph & f, const Crg & k, std::span<const int> phi) -> bool
{
    if (static_cast<int>(phi.size()) != f.order())
        return false;
    for (int u = 0; u < f.order(); ++u) {
        if (phi[u] < 0 || phi[u] >= k.order())
            return false;
        for (int v = u + 1; v < f.order(); ++v) {
            const bool edge = f.adjacent(u, v);
            if (phi[u] == phi[v]) {
                if (k.vertex(phi[u]) != (edge ? Color::Black : Color::White))
                    return false;
            }
            else {
                const Color c = k.edge(phi[u], phi[v]);
                if (c != Color::Gray && c != (edge ? Color::Black : Color::White))
                    return false;
            }
        }
    }
    return true;
}

namespace detail {

    struct EmbeddingSearch
    {
        const Graph & f;
        std::vector<int> order;
        // allowed[edge][a]: K-vertices b that may host a neighbour (edge=1)
        // or non-neighbour (edge=0) of an F-vertex placed on a.
        std::vector<VertexSet> allowed[2];
        std::vector<int> phi;

        auto run(std::size_t depth, std::vector<VertexSet> & domains) -> bool
        {
            if (depth == order.size())
                return true;
            const int v = order[depth];
            for (VertexSet cand = domains[v]; cand; cand &= cand - 1) {
                const int a = std::countr_zero(cand);
                std::vector<VertexSet> next = domains;
                bool wiped = false;
                for (std::size_t d = depth + 1; d < order.size() && !wiped; ++d) {
                    const int w = order[d];
                    next[w] &= allowed[f.adjacent(v, w) ? 1 : 0][a];
                    wiped = next[w] == 0;
                }
                if (wiped)
                    continue;
                phi[v] = a;
                if (run(depth + 1, next))
                    return true;
            }
            return false;
        }
    };

} // namespace detail

/// Exact decision by backtracking with forward checking. F-vertices are
/// visited by descending degree; candidates in index order.
inline auto embeds(const Graph & f, const Crg & k, int cap = Limits{}.embed_pattern) -> std::optional<Embedding>
{
    if (f.order() > cap)
        throw CapExceeded("embeds: pattern graph with " + std::to_string(f.order()) + " vertices exceeds cap "
                          + std::to_string(cap));
    if (k.order() > max_graph_vertices)
        throw CapExceeded("embeds: CRG with more than 64 vertices");
    if (f.order() == 0)
        return Embedding{};
    if (k.order() == 0)
        return std::nullopt;

    const int m = k.order();
    detail::EmbeddingSearch s{f, detail::degree_order(f), {}, std::vector<int>(static_cast<std::size_t>(f.order()), -1)};
    for (int e = 0; e < 2; ++e)
        s.allowed[e].assign(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) {
                if (k.vertex(a) == Color::Black)
                    s.allowed[1][a] |= bit(b);
                else
                    s.allowed[0][a] |= bit(b);
            }
            else {
                const Color c = k.edge(a, b);
                if (c != Color::White)
                    s.allowed[1][a] |= bit(b);
                if (c != Color::Black)
                    s.allowed[0][a] |= bit(b);
            }
        }
    std::vector<VertexSet> domains(static_cast<std::size_t>(f.order()), low_mask(m));
    if (s.run(0, domains))
        return s.phi;
    return std::nullopt;
}

namespace detail {

    // Partition search for a LOW-side configuration: white parts must be
    // independent, a part on D_c must induce at most c disjoint cliques.
    struct DalmatianSearch
    {
        const Graph & g;
        std::vector<int> order;
        std::vector<int> capacity;                   // per clique component
        std::vector<VertexSet> clique_parts;         // union of the part
        std::vector<std::vector<VertexSet>> cliques; // cliques inside each part
        std::vector<VertexSet> white_parts;

        auto run(std::size_t depth) -> bool
        {
            if (depth == order.size())
                return true;
            const int v = order[depth];
            const VertexSet nv = g.neighbours(v);

            bool tried_empty_white = false;
            for (std::size_t k = 0; k < white_parts.size(); ++k) {
                if (white_parts[k] == 0) {
                    if (tried_empty_white)
                        continue;
                    tried_empty_white = true;
                }
                if (nv & white_parts[k])
                    continue;
                white_parts[k] |= bit(v);
                if (run(depth + 1))
                    return true;
                white_parts[k] &= ~bit(v);
            }

            for (std::size_t i = 0; i < capacity.size(); ++i) {
                // empty components of equal capacity are interchangeable
                if (clique_parts[i] == 0 && i > 0 && clique_parts[i - 1] == 0 && capacity[i - 1] == capacity[i])
                    continue;
                const VertexSet touched = nv & clique_parts[i];
                auto & cl = cliques[i];
                if (touched == 0) {
                    if (static_cast<int>(cl.size()) >= capacity[i])
                        continue;
                    cl.push_back(bit(v));
                    clique_parts[i] |= bit(v);
                    if (run(depth + 1))
                        return true;
                    clique_parts[i] &= ~bit(v);
                    cl.pop_back();
                }
                else {
                    const auto at = static_cast<std::size_t>(
                        std::find_if(cl.begin(), cl.end(), [&](VertexSet c) { return c & touched; }) - cl.begin());
                    if (at == cl.size() || cl[at] != touched)
                        continue;
                    cl[at] |= bit(v);
                    clique_parts[i] |= bit(v);
                    if (run(depth + 1))
                        return true;
                    clique_parts[i] &= ~bit(v);
                    cl[at] &= ~bit(v);
                }
            }
            return false;
        }
    };

    inline auto embeds_low(const Graph & g, std::span<const int> sizes, int white) -> bool
    {
        if (g.order() == 0)
            return true;
        const int comps = static_cast<int>(sizes.size()) + white;
        if (comps == 0)
            return false;
        if (comps >= g.order())
            return true;    // one vertex per component, all cross pairs gray
        DalmatianSearch s{g, degree_order(g), {}, {}, {}, {}};
        s.capacity.assign(sizes.begin(), sizes.end());
        std::sort(s.capacity.begin(), s.capacity.end(), std::greater<>{});
        s.clique_parts.assign(s.capacity.size(), 0);
        s.cliques.assign(s.capacity.size(), {});
        s.white_parts.assign(static_cast<std::size_t>(white), 0);
        return s.run(0);
    }

} // namespace detail

/// Structured test for F |-> materialize(cfg). HIGH-side configurations are
/// complements, so the LOW test runs on the complement of F.
inline auto embeds_dalmatian(const Graph & f, const DalmatianConfig & cfg) -> bool
{
    if (cfg.side == Side::Low)
        return detail::embeds_low(f, cfg.clique_sizes, cfg.white_count);
    return detail::embeds_low(complement(f), cfg.clique_sizes, cfg.white_count);
}

/// K belongs to the family of CRGs into which no forbidden graph embeds.
inline auto in_family_KH(const Crg & k, std::span<const Graph> forbidden, int cap = Limits{}.embed_pattern) -> bool
{
    for (const auto & f : forbidden)
        if (embeds(f, k, cap))
            return false;
    return true;
}

} // namespace crgkit
