#pragma once

// Trimming a CRG to a p-core sub-CRG with bounded support, bounded
// non-gray degree and bounded component order, while g grows by at most a
// (1 + eps) factor.

#include <crgkit/crg.hpp>
#include <crgkit/errors.hpp>
#include <crgkit/gfun.hpp>
#include <crgkit/prohibit.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace crgkit {

struct TrimReport
{
    double epsilon = 0.0;
    double p = 0.0;
    double g_before = 0.0;
    double g_after = 0.0;
    double g_phase_boundary = 0.0;            // g once |V| <= 4/(eps g) first holds
    std::vector<int> vertex_trace;            // removed vertices, original labels, in order
    std::vector<int> kept;                    // surviving vertices, original labels
    double max_removal_excess = -std::numeric_limits<double>::infinity();    // max of g(K-u) - bound
    double degree_bound = 0.0;
    int max_degree = 0;
    int path_length = 0;                      // d
    double degree_cap_D = 0.0;                // D
    std::uint64_t component_bound = 0;        // B, saturating
    int max_component_order = 0;
};

struct TrimResult
{
    Crg crg;
    TrimReport report;
};

/// g(K - u) <= g + x(u)^2 / (1 - x(u))^2 for p-core K with >= 2 vertices.
inline auto removal_bound(const GResult & r, int u) -> double
{
    if (!r.is_core)
        throw ContractError("removal_bound: CRG is not p-core");
    if (r.x.size() < 2)
        throw ContractError("removal_bound: CRG needs at least two vertices");
    const double xu = r.x.at(static_cast<std::size_t>(u));
    return r.g + xu * xu / ((1.0 - xu) * (1.0 - xu));
}

inline auto removal_bound(const Crg & k, double p, int u) -> double { return removal_bound(g_value(k, p), u); }

/// 17 eps^{-1} max{1/p, 1/(1-p)}.
inline auto degree_bound(double p, double eps) -> double
{
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInput("degree_bound needs p in (0,1)");
    if (!(eps > 0.0 && eps < 1.0))
        throw InvalidInput("degree_bound needs eps in (0,1)");
    return 17.0 / eps * std::max(1.0 / p, 1.0 / (1.0 - p));
}

inline auto non_gray_degree(const Crg & k, int u) -> int
{
    int d = 0;
    for (int v = 0; v < k.order(); ++v)
        if (v != u && k.edge(u, v) != Color::Gray)
            ++d;
    return d;
}

namespace detail {

    inline void check_eps(double eps)
    {
        if (!(eps > 0.0 && eps < 1.0))
            throw InvalidInput("eps must lie in (0,1)");
    }

    inline auto relabel(const std::vector<int> & local, const std::vector<int> & labels) -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(local.size());
        for (int v : local)
            out.push_back(labels[v]);
        return out;
    }

} // namespace detail

/// Repeatedly delete a minimum-weight vertex (lowest index among weights
/// within 1e-12 of the minimum) and shrink to a core, until |V| <= 4/(eps g)
/// and every optimal weight is at least eps g, where g is the input's value.
inline auto trim_to_small_support(const Crg & k, double p, double eps) -> TrimResult
{
    detail::check_eps(eps);
    const auto first = g_value(k, p);
    if (!first.is_core)
        throw ContractError("trim_to_small_support: input CRG is not p-core");

    TrimReport rep;
    rep.epsilon = eps;
    rep.p = p;
    rep.g_before = first.g;
    const double size_cap = first.g > 0.0 ? 4.0 / (eps * first.g) : std::numeric_limits<double>::infinity();
    const double weight_floor = eps * first.g;

    std::vector<int> labels(static_cast<std::size_t>(k.order()));
    std::iota(labels.begin(), labels.end(), 0);
    Crg cur = k;
    GResult r = first;
    bool phase_two = false;

    for (;;) {
        if (!phase_two && cur.order() <= size_cap) {
            phase_two = true;
            rep.g_phase_boundary = r.g;
        }
        const double min_weight = *std::min_element(r.x.begin(), r.x.end());
        if (phase_two && min_weight >= weight_floor)
            break;
        if (cur.order() == 1)
            break;

        const int u = static_cast<int>(
            std::find_if(r.x.begin(), r.x.end(), [&](double w) { return w <= min_weight + detail::tie_tol; })
            - r.x.begin());
        const double bound = removal_bound(r, u);
        rep.vertex_trace.push_back(labels[u]);

        Crg next = remove_vertex(cur, u);
        labels.erase(labels.begin() + u);
        const auto core = core_vertices(next, p);
        {
            std::vector<bool> in_core(labels.size(), false);
            for (int v : core)
                in_core[v] = true;
            for (std::size_t v = 0; v < labels.size(); ++v)
                if (!in_core[v])
                    rep.vertex_trace.push_back(labels[v]);
        }
        labels = detail::relabel(core, labels);
        cur = induced_sub_crg(next, core);
        r = g_value(cur, p);
        rep.max_removal_excess = std::max(rep.max_removal_excess, r.g - bound);
    }

    if (!phase_two)
        rep.g_phase_boundary = r.g;
    rep.g_after = r.g;
    rep.kept = labels;
    for (int u = 0; u < cur.order(); ++u)
        rep.max_degree = std::max(rep.max_degree, non_gray_degree(cur, u));
    return {std::move(cur), std::move(rep)};
}

/// Small-support trimming with budget eps/17, then a check that every
/// vertex has at most degree_bound(p, eps) non-gray edges. The check is a
/// validation: exceeding it aborts with a ContractError.
inline auto trim_to_bounded_degree(const Crg & k, double p, double eps) -> TrimResult
{
    const double bound = degree_bound(p, eps);
    auto out = trim_to_small_support(k, p, eps / 17.0);
    out.report.epsilon = eps;
    out.report.degree_bound = bound;
    if (out.report.max_degree > bound)
        throw ContractError("trim_to_bounded_degree: vertex with " + std::to_string(out.report.max_degree)
                            + " non-gray edges exceeds the bound " + std::to_string(bound));
    return out;
}

struct ComponentBound
{
    int d = 0;                // least path order prohibited at p (d >= 3)
    double D = 0.0;           // degree bound
    std::uint64_t B = 0;      // floor of 1 + D + D(D-1) + ... + D(D-1)^{d-1}, saturating
    double B_real = 0.0;
};

inline auto component_order_bound(double p, double eps) -> ComponentBound
{
    if (!(p > 1.0 / 3.0 && p < 2.0 / 3.0))
        throw InvalidInput("component_order_bound needs p in (1/3, 2/3)");
    detail::check_eps(eps);
    ComponentBound cb;
    const double target = std::min(p, 1.0 - p);
    cb.d = 3;
    while (path_prohibition_lo(cb.d) > target)
        ++cb.d;
    cb.D = degree_bound(p, eps);
    double term = cb.D, total = 1.0;
    for (int i = 0; i < cb.d; ++i) {
        total += term;
        term *= cb.D - 1.0;
    }
    cb.B_real = total;
    constexpr double max_count = 1.8e19;
    cb.B = total >= max_count ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(std::floor(total));
    return cb;
}

/// Full pipeline: shrink to a core, trim with the degree budget, then
/// validate every component order against B(p, eps).
inline auto trim_bounded_components(const Crg & k, double p, double eps) -> TrimResult
{
    const auto cb = component_order_bound(p, eps);
    const double g_input = g_value(k, p).g;

    const auto core = core_vertices(k, p);
    std::vector<int> dropped;
    {
        std::vector<bool> in_core(static_cast<std::size_t>(k.order()), false);
        for (int v : core)
            in_core[v] = true;
        for (int v = 0; v < k.order(); ++v)
            if (!in_core[v])
                dropped.push_back(v);
    }
    auto out = trim_to_bounded_degree(induced_sub_crg(k, core), p, eps);

    auto & rep = out.report;
    rep.g_before = g_input;
    for (auto & v : rep.vertex_trace)
        v = core[v];
    rep.vertex_trace.insert(rep.vertex_trace.begin(), dropped.begin(), dropped.end());
    rep.kept = detail::relabel(rep.kept, core);
    rep.path_length = cb.d;
    rep.degree_cap_D = cb.D;
    rep.component_bound = cb.B;
    for (const auto & block : components(out.crg).blocks)
        rep.max_component_order = std::max(rep.max_component_order, static_cast<int>(block.size()));
    if (static_cast<std::uint64_t>(rep.max_component_order) > cb.B)
        throw ContractError("trim_bounded_components: component of order " + std::to_string(rep.max_component_order)
                            + " exceeds B");
    return out;
}

inline void write_trim_report(std::ostream & out, const TrimReport & r)
{
    out << "epsilon " << r.epsilon << '\n'
        << "p " << r.p << '\n'
        << "g_before " << r.g_before << '\n'
        << "g_after " << r.g_after << '\n'
        << "g_phase_boundary " << r.g_phase_boundary << '\n'
        << "removed";
    for (int v : r.vertex_trace)
        out << ' ' << v;
    out << "\nkept";
    for (int v : r.kept)
        out << ' ' << v;
    out << "\ndegree_bound " << r.degree_bound << '\n'
        << "max_degree " << r.max_degree << '\n'
        << "path_length " << r.path_length << '\n'
        << "component_bound " << r.component_bound << '\n'
        << "max_component_order " << r.max_component_order << '\n';
}

} // namespace crgkit
