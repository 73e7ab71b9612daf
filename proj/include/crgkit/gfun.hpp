#pragma once

// The quadratic form g_K(p, x) = <x, M_K(p) x> and its exact minimum over
// the weight simplex.
//
// The form is in general indefinite, so the minimum is found by visiting
// every face of the simplex. On the face with support S the stationary
// points solve the bordered system
//
//     [ M_S  1 ] [ x  ]   [ 0 ]
//     [ 1^T  0 ] [ nu ] = [ 1 ],       g = -nu,
//
// and every global minimiser appears as a feasible solution on its own
// support (or on a sub-face with the same value when that system is
// singular). One pass over all faces also yields g(K - u) for every u, which
// gives the core test without further solves.

#include <crgkit/crg.hpp>
#include <crgkit/dalmatian.hpp>
#include <crgkit/errors.hpp>
#include <crgkit/linalg.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace crgkit {

inline auto check_probability(double p, const char * what = "p") -> void
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput(std::string(what) + " must lie in [0,1]");
}

/// Diagonal p on white vertices and 1-p on black ones; off-diagonal p on
/// white edges, 1-p on black edges, 0 on gray edges.
inline auto matrix_M(const Crg & k, double p) -> Matrix
{
    check_probability(p);
    const auto n = static_cast<std::size_t>(k.order());
    Matrix m(n);
    auto weight = [p](Color c) { return c == Color::White ? p : c == Color::Black ? 1.0 - p : 0.0; };
    for (int u = 0; u < k.order(); ++u) {
        m(u, u) = weight(k.vertex(u));
        for (int v = u + 1; v < k.order(); ++v)
            m(u, v) = m(v, u) = weight(k.edge(u, v));
    }
    return m;
}

struct GResult
{
    double g = 0.0;
    std::vector<double> x;        // optimal weight vector over V(K)
    std::vector<int> support;     // vertices with x > 0
    bool is_core = false;
    double kkt_residual = 0.0;    // max over support of |(Mx)_u - g|
    double off_support_slack = std::numeric_limits<double>::infinity();    // min over off-support of (Mx)_u - g
    std::vector<double> g_without;    // g(K - u); +inf for a 1-vertex CRG
    int skipped_faces = 0;            // singular faces with no consistent solution
};

namespace detail {

    inline constexpr double tie_tol = 1e-12;
    inline constexpr double core_margin = 1e-10;
    inline constexpr double feasibility_tol = 1e-12;

    // Equal-value candidates: fewer vertices first, then the smaller
    // sorted index list.
    inline auto prefer_support(std::uint32_t a, std::uint32_t b) -> bool
    {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) < std::popcount(b);
        const std::uint32_t diff = a ^ b;
        return (a >> std::countr_zero(diff)) & 1U;
    }

    struct FaceCandidate
    {
        bool ok = false;
        bool skipped = false;
        double value = 0.0;
        std::vector<double> x;    // over the face
        std::uint32_t support = 0;
    };

    inline auto solve_face(const Matrix & m, std::uint32_t mask) -> FaceCandidate
    {
        std::vector<int> idx;
        for (std::uint32_t r = mask; r; r &= r - 1)
            idx.push_back(std::countr_zero(r));
        const std::size_t k = idx.size();

        Matrix b(k + 1);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                b(i, j) = m(idx[i], idx[j]);
            b(i, k) = b(k, i) = 1.0;
        }
        std::vector<double> rhs(k + 1, 0.0);
        rhs[k] = 1.0;

        FaceCandidate out;
        std::vector<double> sol;
        if (auto direct = solve_linear(b, rhs))
            sol = std::move(*direct);
        else {
            sol = symmetric_pseudo_solve(b, rhs, 1e-10);
            const auto back = b.apply(sol);
            double res = 0.0;
            for (std::size_t i = 0; i <= k; ++i)
                res = std::max(res, std::abs(back[i] - rhs[i]));
            if (res > 1e-8) {
                out.skipped = true;
                return out;
            }
        }

        std::vector<double> x(k);
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(sol[i] >= -feasibility_tol))
                return out;
            x[i] = std::max(sol[i], 0.0);
            total += x[i];
        }
        if (!(total > 0.0))
            return out;
        for (auto & v : x)
            v /= total;

        double value = 0.0;
        std::uint32_t support = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (x[i] > 0.0)
                support |= std::uint32_t{1} << idx[i];
            double row = 0.0;
            for (std::size_t j = 0; j < k; ++j)
                row += m(idx[i], idx[j]) * x[j];
            value += x[i] * row;
        }
        out.ok = true;
        out.value = value;
        out.x = std::move(x);
        out.support = support;
        return out;
    }

} // namespace detail

/// Exact g_K(p) with an optimal weight vector and the core verdict.
/// Cost is 2^n small linear solves, hence the cap.
inline auto g_value(const Crg & k, double p, int cap = Limits{}.g_support) -> GResult
{
    check_probability(p);
    const int n = k.order();
    if (n == 0)
        throw InvalidInput("g_value of an empty CRG");
    if (n > cap || n > 30)
        throw CapExceeded("g_value: " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap)
                          + " for exact minimisation by exponential support enumeration");

    const Matrix m = matrix_M(k, p);
    const double inf = std::numeric_limits<double>::infinity();

    GResult r;
    r.g = inf;
    r.g_without.assign(static_cast<std::size_t>(n), inf);
    std::uint32_t best_support = 0;
    std::vector<double> best_face_x;
    std::uint32_t best_mask = 0;

    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        auto cand = detail::solve_face(m, mask);
        if (cand.skipped)
            ++r.skipped_faces;
        if (!cand.ok)
            continue;

        for (int u = 0; u < n; ++u)
            if (!((cand.support >> u) & 1U))
                r.g_without[u] = std::min(r.g_without[u], cand.value);

        const bool better = cand.value < r.g - detail::tie_tol
                            || (cand.value <= r.g + detail::tie_tol && detail::prefer_support(cand.support, best_support));
        if (better) {
            r.g = cand.value;
            best_support = cand.support;
            best_face_x = std::move(cand.x);
            best_mask = mask;
        }
    }

    r.x.assign(static_cast<std::size_t>(n), 0.0);
    {
        std::size_t i = 0;
        for (std::uint32_t rr = best_mask; rr; rr &= rr - 1, ++i)
            r.x[std::countr_zero(rr)] = best_face_x[i];
    }
    for (int u = 0; u < n; ++u)
        if (r.x[u] > 0.0)
            r.support.push_back(u);

    const auto mx = m.apply(r.x);
    for (int u = 0; u < n; ++u) {
        if (r.x[u] > 0.0)
            r.kkt_residual = std::max(r.kkt_residual, std::abs(mx[u] - r.g));
        else
            r.off_support_slack = std::min(r.off_support_slack, mx[u] - r.g);
    }

    r.is_core = true;
    for (int u = 0; u < n; ++u)
        if (!(r.g_without[u] > r.g + detail::core_margin))
            r.is_core = false;
    return r;
}

/// Residual of M_K(p) x = g 1 at the optimal x. Only meaningful (and only
/// allowed) for p-core K.
inline auto check_degree_condition(const GResult & r) -> double
{
    if (!r.is_core)
        throw ContractError("check_degree_condition: CRG is not p-core");
    return r.kkt_residual;
}

inline auto check_degree_condition(const Crg & k, double p) -> double { return check_degree_condition(g_value(k, p)); }

/// g of a disjoint union from the parts: g^{-1} = sum of g_i^{-1}.
inline auto archipelago_g(std::span<const Crg> parts, double p) -> double
{
    if (parts.empty())
        throw InvalidInput("archipelago_g of an empty list");
    double inverse = 0.0;
    for (const auto & part : parts) {
        const double g = g_value(part, p).g;
        if (g <= 0.0)
            return 0.0;
        inverse += 1.0 / g;
    }
    return 1.0 / inverse;
}

/// Necessary colour structure of a p-core CRG: for p <= 1/2 no black edges
/// and white edges only between black vertices; for p >= 1/2 the mirror
/// statement. At p = 1/2 both apply, so every edge is gray.
inline auto check_p_core_colors(const Crg & k, double p) -> bool
{
    check_probability(p);
    for (int u = 0; u < k.order(); ++u)
        for (int v = u + 1; v < k.order(); ++v) {
            const Color e = k.edge(u, v);
            if (p <= 0.5) {
                if (e == Color::Black)
                    return false;
                if (e == Color::White && (k.vertex(u) != Color::Black || k.vertex(v) != Color::Black))
                    return false;
            }
            if (p >= 0.5) {
                if (e == Color::White)
                    return false;
                if (e == Color::Black && (k.vertex(u) != Color::White || k.vertex(v) != Color::White))
                    return false;
            }
        }
    return true;
}

/// Vertices of a p-core sub-CRG with the same g: keep the optimiser's
/// support, re-solve, repeat until the verdict is core.
inline auto core_vertices(const Crg & k, double p) -> std::vector<int>
{
    std::vector<int> keep(static_cast<std::size_t>(k.order()));
    std::iota(keep.begin(), keep.end(), 0);
    for (;;) {
        const auto sub = induced_sub_crg(k, keep);
        const auto r = g_value(sub, p);
        if (r.is_core)
            return keep;
        std::vector<int> next;
        for (int s : r.support)
            next.push_back(keep[s]);
        if (next.size() == keep.size()) {
            // Optimiser has full support but another optimiser does not:
            // drop the vertex whose removal keeps g.
            for (std::size_t u = 0; u < keep.size(); ++u)
                if (!(r.g_without[u] > r.g + detail::core_margin)) {
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(u));
                    break;
                }
        }
        keep = std::move(next);
    }
}

inline auto core_reduce(const Crg & k, double p) -> Crg
{
    const auto keep = core_vertices(k, p);
    return induced_sub_crg(k, keep);
}

} // namespace crgkit
