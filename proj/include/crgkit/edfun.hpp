#pragma once

// Edit distance function of Forb(F) on the golden-ratio interval.
//
// There every p-core CRG is a disjoint union of dalmatians (p < 1/2), of
// their complements (p > 1/2) or of single vertices (p = 1/2), so the
// minimum of g over CRGs excluding F is a minimum over dalmatian
// configurations. Two facts make the search finite:
//   * a configuration with |V(F)| components admits F (one vertex each);
//   * a D_c with c >= |V(F)| admits every part D_inf admits, and D_inf has
//     smaller g, so sizes stop at |V(F)| - 1.
// Exclusion is closed downwards under dominance, and g decreases upwards,
// so only the maximal excluded configurations matter.

#include <crgkit/dalmatian.hpp>
#include <crgkit/embed.hpp>
#include <crgkit/errors.hpp>
#include <crgkit/gfun.hpp>
#include <crgkit/graph.hpp>
#include <crgkit/prohibit.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace crgkit {

enum class Validity
{
    Exact,         // p in the golden interval
    UpperBound,    // dalmatian-family minimum only
};

inline auto validity_name(Validity v) -> const char * { return v == Validity::Exact ? "EXACT" : "UPPER_BOUND"; }

inline auto in_golden_interval(double p) -> bool { return p >= golden_lo && p <= golden_hi; }

inline auto validity_at(double p) -> Validity { return in_golden_interval(p) ? Validity::Exact : Validity::UpperBound; }

/// All maximal dalmatian configurations on `side` into which F does not
/// embed, in lexicographic order of (clique sizes, white count).
inline auto enumerate_maximal_excluded(const Graph & f, Side side, int cap = Limits{}.ed_exact) -> std::vector<DalmatianConfig>
{
    if (f.order() > cap)
        throw CapExceeded("enumerate_maximal_excluded: " + std::to_string(f.order()) + " vertices exceeds the exact cap "
                          + std::to_string(cap) + "; use the chromatic upper bound instead");
    const Graph g = side == Side::Low ? f : complement(f);
    const int n = g.order();
    if (n < 2)
        return {};
    const int max_components = n - 1;

    std::map<std::pair<std::vector<int>, int>, bool> memo;
    auto excluded = [&](const std::vector<int> & sizes, int white) {
        auto key = std::make_pair(sizes, white);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const bool r = !detail::embeds_low(g, sizes, white);
        memo.emplace(std::move(key), r);
        return r;
    };

    std::vector<DalmatianConfig> candidates;
    std::vector<int> sizes;

    // `sizes` is excluded with no white components when this is entered.
    auto visit = [&](auto && self, int white_bound) -> void {
        const int l = static_cast<int>(sizes.size());
        int w = std::min(white_bound, max_components - l);
        while (w > 0 && !excluded(sizes, w))
            --w;
        if (l > 0 || w > 0)
            candidates.push_back({sizes, w, side});
        if (l == max_components)
            return;
        const int largest = sizes.empty() ? n - 1 : sizes.back();
        for (int c = 1; c <= largest; ++c) {
            sizes.push_back(c);
            const bool ok = excluded(sizes, 0);
            if (ok)
                self(self, w);
            sizes.pop_back();
            if (!ok)
                break;
        }
    };
    visit(visit, max_components);

    std::vector<DalmatianConfig> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
            dominated = j != i && candidates[j] != candidates[i] && dominates(candidates[j], candidates[i]);
        if (!dominated)
            maximal.push_back(candidates[i]);
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    return maximal;
}

/// At p = 1/2: the largest w + b such that F does not split into w
/// independent sets and b cliques, with the witness as w white and b black
/// singletons. Smallest w wins ties.
inline auto half_density_witness(const Graph & f) -> DalmatianConfig
{
    const int n = f.order();
    DalmatianConfig best;
    int best_total = 0;
    for (int w = 0; w < n; ++w) {
        int b = -1;
        while (w + b + 1 < n && !cocoloring_feasible(f, w, b + 1))
            ++b;
        if (b < 0)
            break;    // feasible already with b = 0, and for every larger w
        if (w + b > best_total) {
            best_total = w + b;
            best = {std::vector<int>(static_cast<std::size_t>(b), 1), w, Side::Low};
        }
    }
    return best;
}

struct EdValue
{
    double p = 0.0;
    double value = 0.0;
    DalmatianConfig witness;
    Validity validity = Validity::Exact;
};

/// Caches the per-graph searches so a whole grid costs one enumeration
/// per side.
class EditDistance
{
public:
    explicit EditDistance(Graph f, Limits limits = {}) : f_(std::move(f)), limits_(limits)
    {
        if (f_.order() < 2)
            throw InvalidInput("Forb(F) is trivial for |V(F)| < 2");
        if (f_.order() > limits_.ed_exact)
            throw CapExceeded("edit distance: " + std::to_string(f_.order()) + " vertices exceeds the exact cap "
                              + std::to_string(limits_.ed_exact) + "; use the chromatic upper bound instead");
    }

    auto forbidden() const -> const Graph & { return f_; }

    auto frontier(Side side) const -> const std::vector<DalmatianConfig> &
    {
        auto & slot = side == Side::Low ? low_ : high_;
        if (!slot)
            slot = enumerate_maximal_excluded(f_, side, limits_.ed_exact);
        return *slot;
    }

    auto half_witness() const -> const DalmatianConfig &
    {
        if (!half_)
            half_ = half_density_witness(f_);
        return *half_;
    }

    /// Minimum of the closed form over one side's frontier.
    auto side_minimum(Side side, double p) const -> EdValue
    {
        EdValue best{p, std::numeric_limits<double>::infinity(), {}, validity_at(p)};
        for (const auto & cfg : frontier(side)) {
            const double v = g_dalmatian_closed_form(cfg, p);
            if (v < best.value) {
                best.value = v;
                best.witness = cfg;
            }
        }
        return best;
    }

    auto at(double p) const -> EdValue
    {
        check_probability(p);
        if (p == 0.5) {
            const auto & w = half_witness();
            return {p, g_dalmatian_closed_form(w, p), w, Validity::Exact};
        }
        return side_minimum(p < 0.5 ? Side::Low : Side::High, p);
    }

private:
    Graph f_;
    Limits limits_;
    mutable std::optional<std::vector<DalmatianConfig>> low_, high_;
    mutable std::optional<DalmatianConfig> half_;
};

inline auto ed_at(const Graph & f, double p, Limits limits = {}) -> EdValue { return EditDistance(f, limits).at(p); }

inline auto ed_curve(const Graph & f, std::span<const double> grid, Limits limits = {}) -> std::vector<EdValue>
{
    EditDistance ed(f, limits);
    std::vector<EdValue> rows;
    rows.reserve(grid.size());
    for (double p : grid)
        rows.push_back(ed.at(p));
    return rows;
}

/// Distinct witnesses over the grid, as CRGs; by construction they realise
/// the minimum at every grid point.
inline auto finite_defining_set(const Graph & f, std::span<const double> grid, Limits limits = {}) -> std::vector<DalmatianConfig>
{
    std::set<DalmatianConfig> out;
    for (const auto & row : ed_curve(f, grid, limits))
        out.insert(canonical_config(row.witness));
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Speed function through the change of variables p* = f(p0).

/// f(x) = log(1-x) / log(x(1-x)), increasing from 0 to 1 on (0,1).
inline auto p_star(double p0) -> double
{
    if (!(p0 > 0.0 && p0 < 1.0))
        throw InvalidInput("p_star needs p0 in (0,1)");
    return std::log1p(-p0) / std::log(p0 * (1.0 - p0));
}

/// Inverse of p_star by bisection to 1e-12.
inline auto f_inverse(double y) -> double
{
    if (!(y > 0.0 && y < 1.0))
        throw InvalidInput("f_inverse needs y in (0,1)");
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= 0.0 || mid >= 1.0)
            break;
        (p_star(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct SpeedValue
{
    double p0 = 0.0;
    double p_star = 0.0;
    double value = 0.0;
    DalmatianConfig witness;
    Validity validity = Validity::Exact;
};

/// c(p0) = -log2(p0(1-p0)) * ed(p*(p0)); flagged UPPER_BOUND whenever the
/// edit distance at p* is.
inline auto speed_from_ed(const EditDistance & ed, double p0) -> SpeedValue
{
    const double ps = p_star(p0);
    const auto e = ed.at(ps);
    return {p0, ps, -std::log2(p0 * (1.0 - p0)) * e.value, e.witness, e.validity};
}

inline auto speed_from_ed(const Graph & f, double p0, Limits limits = {}) -> SpeedValue
{
    return speed_from_ed(EditDistance(f, limits), p0);
}

} // namespace crgkit
