#pragma once

// Finite simple graphs on at most 64 vertices, stored as adjacency bitsets.

#include <crgkit/errors.hpp>
#include <crgkit/linalg.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace crgkit {

using VertexSet = std::uint64_t;

inline constexpr int max_graph_vertices = 64;

inline auto bit(int v) noexcept -> VertexSet { return VertexSet{1} << v; }

inline auto low_mask(int n) noexcept -> VertexSet { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

class Graph
{
public:
    Graph() = default;

    explicit Graph(int n) : n_(n)
    {
        if (n < 0 || n > max_graph_vertices)
            throw CapExceeded("graph with " + std::to_string(n) + " vertices exceeds the 64-vertex bitset cap");
        rows_.assign(static_cast<std::size_t>(n), 0);
    }

    auto order() const noexcept -> int { return n_; }

    auto adjacent(int u, int v) const -> bool { return (rows_[u] >> v) & 1U; }
    auto neighbours(int u) const -> VertexSet { return rows_[u]; }
    auto degree(int u) const -> int { return std::popcount(rows_[u]); }

    void add_edge(int u, int v)
    {
        check_pair(u, v);
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
    }

    void remove_edge(int u, int v)
    {
        check_pair(u, v);
        rows_[u] &= ~bit(v);
        rows_[v] &= ~bit(u);
    }

    auto edge_count() const -> int
    {
        int s = 0;
        for (auto r : rows_)
            s += std::popcount(r);
        return s / 2;
    }

    auto edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    auto is_clique(VertexSet s) const -> bool
    {
        for (VertexSet r = s; r; r &= r - 1) {
            const int v = std::countr_zero(r);
            if ((rows_[v] & s) != (s & ~bit(v)))
                return false;
        }
        return true;
    }

    auto is_independent(VertexSet s) const -> bool
    {
        for (VertexSet r = s; r; r &= r - 1)
            if (rows_[std::countr_zero(r)] & s)
                return false;
        return true;
    }

    auto operator==(const Graph &) const -> bool = default;

private:
    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidInput("vertex index out of range");
        if (u == v)
            throw InvalidInput("loops are not allowed");
    }

    int n_ = 0;
    std::vector<VertexSet> rows_;
};

// ---------------------------------------------------------------------------
// Constructors for named graphs

inline auto empty_graph(int n) -> Graph { return Graph(n); }

inline auto complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

/// P_n: the path on n vertices.
inline auto path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw InvalidInput("a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline auto star_graph(int leaves) -> Graph
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

inline auto petersen_graph() -> Graph
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

/// Labeled graph on n vertices whose edge set is read from the bits of
/// `code`, pairs ordered (0,1),(0,2),(1,2),(0,3),... Used for exhaustive
/// enumeration.
inline auto graph_from_code(int n, std::uint64_t code) -> Graph
{
    Graph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((code >> idx) & 1U)
                g.add_edge(u, v);
    return g;
}

inline auto pair_count(int n) -> int { return n * (n - 1) / 2; }

inline auto complement(const Graph & g) -> Graph
{
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                c.add_edge(u, v);
    return c;
}

inline auto induced_subgraph(const Graph & g, const std::vector<int> & vertices) -> Graph
{
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

/// Vertex sets of the connected components, each as a bitset, ordered by
/// smallest member.
inline auto connected_components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    VertexSet unseen = low_mask(g.order());
    while (unseen) {
        VertexSet comp = bit(std::countr_zero(unseen));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet r = frontier; r; r &= r - 1)
                next |= g.neighbours(std::countr_zero(r));
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

inline auto is_connected(const Graph & g) -> bool { return g.order() <= 1 || connected_components(g).size() == 1; }

/// True when every component is complete (the graph is a cluster graph).
inline auto is_disjoint_cliques(const Graph & g) -> bool
{
    for (auto c : connected_components(g))
        if (!g.is_clique(c))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Spectra

inline auto adjacency_matrix(const Graph & g) -> Matrix
{
    Matrix a(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v))
                a(u, v) = 1.0;
    return a;
}

struct Spectrum
{
    std::vector<double> eigenvalues;    // ascending
    double tolerance = 1e-9;
};

inline auto adjacency_spectrum(const Graph & g) -> Spectrum
{
    if (g.order() == 0)
        throw InvalidInput("spectrum of the null graph is undefined");
    return {symmetric_eigen(adjacency_matrix(g)).values, 1e-9};
}

inline auto min_adjacency_eigenvalue(const Graph & g) -> double { return adjacency_spectrum(g).eigenvalues.front(); }

/// Closed-form spectrum of P_d: { 2 cos(pi k / (d+1)) : k = 1..d }.
inline auto path_spectrum(int d) -> Spectrum
{
    if (d < 1)
        throw InvalidInput("path_spectrum needs d >= 1");
    Spectrum s;
    for (int k = 1; k <= d; ++k) {
        double v = 2.0 * std::cos(std::numbers::pi * k / (d + 1));
        if (std::abs(v) < 1e-15)
            v = 0.0;
        s.eigenvalues.push_back(v);
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
    return s;
}

// ---------------------------------------------------------------------------
// Colouring

namespace detail {

    struct ColouringSearch
    {
        const Graph & g;
        std::vector<VertexSet> classes;
        int best;

        // DSATUR-style: branch on the uncoloured vertex seeing most classes.
        void run(VertexSet uncoloured)
        {
            if (!uncoloured) {
                best = std::min(best, static_cast<int>(classes.size()));
                return;
            }
            if (static_cast<int>(classes.size()) >= best)
                return;

            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (VertexSet r = uncoloured; r; r &= r - 1) {
                const int v = std::countr_zero(r);
                int sat = 0;
                for (auto c : classes)
                    if (g.neighbours(v) & c)
                        ++sat;
                const int deg = std::popcount(g.neighbours(v) & uncoloured);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            // every class blocked and no room for a new one
            if (pick_sat + 1 >= best && pick_sat == static_cast<int>(classes.size()))
                return;

            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (g.neighbours(pick) & classes[c])
                    continue;
                classes[c] |= bit(pick);
                run(uncoloured & ~bit(pick));
                classes[c] &= ~bit(pick);
            }
            if (static_cast<int>(classes.size()) + 1 < best) {
                classes.push_back(bit(pick));
                run(uncoloured & ~bit(pick));
                classes.pop_back();
            }
        }
    };

} // namespace detail

/// Exact chromatic number by branch and bound; chi of the null graph is 0.
inline auto chromatic_number(const Graph & g, int cap = Limits{}.chromatic) -> int
{
    if (g.order() > cap)
        throw CapExceeded("chromatic_number: " + std::to_string(g.order()) + " vertices is too large for exact mode (cap "
                          + std::to_string(cap) + ")");
    if (g.order() == 0)
        return 0;
    detail::ColouringSearch s{g, {}, g.order() + 1};
    s.run(low_mask(g.order()));
    return s.best;
}

namespace detail {

    struct CocolouringSearch
    {
        const Graph & g;
        const std::vector<int> & order;
        int max_independent, max_cliques;
        std::vector<VertexSet> independent, cliques;

        auto run(std::size_t i) -> bool
        {
            if (i == order.size())
                return true;
            const int v = order[i];
            const VertexSet nv = g.neighbours(v);
            for (std::size_t k = 0; k < independent.size(); ++k) {
                if (nv & independent[k])
                    continue;
                independent[k] |= bit(v);
                if (run(i + 1))
                    return true;
                independent[k] &= ~bit(v);
            }
            for (std::size_t k = 0; k < cliques.size(); ++k) {
                if ((nv & cliques[k]) != cliques[k])
                    continue;
                cliques[k] |= bit(v);
                if (run(i + 1))
                    return true;
                cliques[k] &= ~bit(v);
            }
            // open at most one fresh part of each kind
            if (static_cast<int>(independent.size()) < max_independent) {
                independent.push_back(bit(v));
                if (run(i + 1))
                    return true;
                independent.pop_back();
            }
            if (static_cast<int>(cliques.size()) < max_cliques) {
                cliques.push_back(bit(v));
                if (run(i + 1))
                    return true;
                cliques.pop_back();
            }
            return false;
        }
    };

    inline auto degree_order(const Graph & g) -> std::vector<int>
    {
        std::vector<int> order(static_cast<std::size_t>(g.order()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        return order;
    }

} // namespace detail

/// Can V(G) be split into at most `w` independent sets and at most `b`
/// cliques? Empty parts are allowed.
inline auto cocoloring_feasible(const Graph & g, int w, int b) -> bool
{
    if (w < 0 || b < 0)
        throw InvalidInput("cocoloring_feasible needs w, b >= 0");
    if (g.order() == 0)
        return true;
    if (w + b >= g.order())
        return true;
    const auto order = detail::degree_order(g);
    detail::CocolouringSearch s{g, order, w, b, {}, {}};
    return s.run(0);
}

// ---------------------------------------------------------------------------
// Structural predicates

inline auto has_dominant_vertex(const Graph & g) -> bool
{
    const VertexSet all = low_mask(g.order());
    for (int v = 0; v < g.order(); ++v)
        if ((g.neighbours(v) | bit(v)) == all)
            return true;
    return false;
}

/// No induced P_4 and no induced C_4. Checks every 4-subset.
inline auto is_p4_c4_free(const Graph & g) -> bool
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const VertexSet s = bit(a) | bit(b) | bit(c) | bit(d);
                    int edges = 0, deg_one = 0, deg_two = 0;
                    for (int v : {a, b, c, d}) {
                        const int k = std::popcount(g.neighbours(v) & s);
                        edges += k;
                        deg_one += (k == 1);
                        deg_two += (k == 2);
                    }
                    edges /= 2;
                    // P_4: 3 edges, degrees 1,1,2,2. C_4: 4 edges, all degree 2.
                    if (edges == 3 && deg_one == 2 && deg_two == 2)
                        return false;
                    if (edges == 4 && deg_two == 4)
                        return false;
                }
    return true;
}

// ---------------------------------------------------------------------------
// Random graphs

/// SplitMix64 finaliser; the mixing function behind the counter-based
/// edge sampler.
inline auto splitmix64(std::uint64_t z) noexcept -> std::uint64_t
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0,1) determined by (seed, counter) alone.
inline auto counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept -> double
{
    const std::uint64_t h = splitmix64(splitmix64(seed) ^ splitmix64(counter ^ 0xd1b54a32d192ed03ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// G(n, p). Pair {u < v} is keyed by v(v-1)/2 + u, so the sample for n is
/// a prefix of the sample for n+1 under the same seed.
inline auto sample_gnp(int n, double p, std::uint64_t seed) -> Graph
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput("sample_gnp: p must lie in [0,1]");
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            const auto key = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
            if (counter_uniform(seed, key) < p)
                g.add_edge(u, v);
        }
    return g;
}

// ---------------------------------------------------------------------------
// Text format: first line n, then one "u v" line per edge, 0-indexed.

inline auto parse_graph(std::istream & in) -> Graph
{
    std::string line;
    int n = -1;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t\r")] == '#')
            continue;
        std::istringstream ls(line);
        if (!(ls >> n) || n < 0)
            throw ParseError("graph: first line must be a vertex count");
        std::string rest;
        if (ls >> rest)
            throw ParseError("graph: trailing data after vertex count");
        break;
    }
    if (n < 0)
        throw ParseError("graph: missing vertex count");
    if (n > max_graph_vertices)
        throw CapExceeded("graph: " + std::to_string(n) + " vertices exceeds the 64-vertex cap");
    Graph g(n);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        int u, v;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest))
            throw ParseError("graph: line " + std::to_string(lineno) + " is not a 'u v' pair");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("graph: line " + std::to_string(lineno) + " has an invalid edge");
        g.add_edge(u, v);
    }
    return g;
}

inline auto parse_graph(const std::string & text) -> Graph
{
    std::istringstream in(text);
    return parse_graph(in);
}

inline void write_graph(std::ostream & out, const Graph & g)
{
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline auto render_graph(const Graph & g) -> std::string
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace crgkit
