#pragma once

// Dalmatian configurations: disjoint unions of finite dalmatians D_c and
// copies of D_inf (LOW side), or of their complements (HIGH side).

#include <crgkit/crg.hpp>
#include <crgkit/errors.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace crgkit {

enum class Side : std::uint8_t
{
    Low,     // p <= 1/2: components D_c and D_inf
    High,    // p > 1/2: components complement(D_c) and D_1 = complement(D_inf)
};

struct DalmatianConfig
{
    std::vector<int> clique_sizes;    // non-increasing, each >= 1
    int white_count = 0;
    Side side = Side::Low;

    auto component_count() const -> int { return static_cast<int>(clique_sizes.size()) + white_count; }

    void normalise() { std::sort(clique_sizes.begin(), clique_sizes.end(), std::greater<>{}); }

    auto operator<=>(const DalmatianConfig &) const = default;
};

inline auto make_config(std::vector<int> sizes, int white, Side side = Side::Low) -> DalmatianConfig
{
    for (int c : sizes)
        if (c < 1)
            throw InvalidInput("dalmatian sizes must be >= 1");
    if (white < 0)
        throw InvalidInput("white count must be >= 0");
    DalmatianConfig cfg{std::move(sizes), white, side};
    cfg.normalise();
    return cfg;
}

/// cfg' dominates cfg when it has at least as many finite dalmatians, the
/// i-th largest of cfg' is at least the i-th largest of cfg, and it has at
/// least as many white components. Both must be on the same side.
inline auto dominates(const DalmatianConfig & big, const DalmatianConfig & small) -> bool
{
    if (big.side != small.side || big.white_count < small.white_count
        || big.clique_sizes.size() < small.clique_sizes.size())
        return false;
    for (std::size_t i = 0; i < small.clique_sizes.size(); ++i)
        if (big.clique_sizes[i] < small.clique_sizes[i])
            return false;
    return true;
}

/// A HIGH configuration of single vertices is the LOW configuration with
/// the vertex colours swapped; rewrite it that way so equal CRGs compare
/// equal.
inline auto canonical_config(DalmatianConfig cfg) -> DalmatianConfig
{
    const bool singletons = std::all_of(cfg.clique_sizes.begin(), cfg.clique_sizes.end(), [](int c) { return c == 1; });
    if (cfg.side == Side::High && singletons) {
        const int black = cfg.white_count;
        cfg.white_count = static_cast<int>(cfg.clique_sizes.size());
        cfg.clique_sizes.assign(static_cast<std::size_t>(black), 1);
        cfg.side = Side::Low;
    }
    return cfg;
}

/// The CRG the configuration stands for: cliques first, white components last.
inline auto materialize(const DalmatianConfig & cfg) -> Crg
{
    std::vector<Crg> parts;
    for (int c : cfg.clique_sizes)
        parts.push_back(make_dalmatian(c));
    for (int i = 0; i < cfg.white_count; ++i)
        parts.push_back(make_dalmatian(infinity_mark));
    if (parts.empty())
        throw InvalidInput("configuration has no components");
    auto k = disjoint_union(parts);
    return cfg.side == Side::Low ? k : complement_crg(k);
}

/// "w;c1,c2,..." with the side left implicit (it follows from p).
inline auto render_config(const DalmatianConfig & cfg) -> std::string
{
    std::ostringstream out;
    out << cfg.white_count << ';';
    for (std::size_t i = 0; i < cfg.clique_sizes.size(); ++i)
        out << (i ? "," : "") << cfg.clique_sizes[i];
    return out.str();
}

inline auto parse_config(const std::string & text, Side side = Side::Low) -> DalmatianConfig
{
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw ParseError("config: expected 'w;c1,c2,...'");
    DalmatianConfig cfg;
    cfg.side = side;
    try {
        std::size_t used = 0;
        cfg.white_count = std::stoi(text.substr(0, semi), &used);
        if (used != semi)
            throw ParseError("config: bad white count");
        std::string rest = text.substr(semi + 1);
        std::istringstream ls(rest);
        std::string tok;
        while (std::getline(ls, tok, ','))
            if (!tok.empty())
                cfg.clique_sizes.push_back(std::stoi(tok));
    }
    catch (const std::logic_error &) {
        throw ParseError("config: expected 'w;c1,c2,...'");
    }
    if (cfg.white_count < 0 || std::any_of(cfg.clique_sizes.begin(), cfg.clique_sizes.end(), [](int c) { return c < 1; }))
        throw ParseError("config: counts must be positive");
    cfg.normalise();
    return cfg;
}

// ---------------------------------------------------------------------------
// Closed forms

/// g of D_t. Uniform weights are optimal for p <= 1/2; for p > 1/2 the
/// diagonal term is smallest, so a single vertex (value 1-p) is optimal.
inline auto g_dalmatian(int t, double p) -> double
{
    if (t < 1)
        throw InvalidInput("dalmatian D_t needs t >= 1");
    return p <= 0.5 && t > 1 ? p + (1.0 - 2.0 * p) / t : 1.0 - p;
}

inline auto g_dalmatian(Infinity, double p) -> double { return p; }

namespace detail {

    // g of complement(D_t) at p, written in p so that t = 1 gives p exactly.
    inline auto g_codalmatian(int t, double p) -> double
    {
        if (t < 1)
            throw InvalidInput("dalmatian D_t needs t >= 1");
        return p >= 0.5 && t > 1 ? (1.0 - p) + (2.0 * p - 1.0) / t : p;
    }

} // namespace detail

/// Harmonic composition of the component values. A zero component makes
/// the whole value zero; no division is performed in that case, nor for a
/// single component.
inline auto g_dalmatian_closed_form(const DalmatianConfig & cfg, double p) -> double
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidInput("p must lie in [0,1]");
    if (cfg.component_count() == 0)
        throw InvalidInput("configuration has no components");
    const bool low = cfg.side == Side::Low;
    std::vector<double> values;
    for (int c : cfg.clique_sizes)
        values.push_back(low ? g_dalmatian(c, p) : detail::g_codalmatian(c, p));
    for (int i = 0; i < cfg.white_count; ++i)
        values.push_back(low ? p : 1.0 - p);
    if (values.size() == 1)
        return values.front();
    double inverse = 0.0;
    for (double v : values) {
        if (v == 0.0)
            return 0.0;
        inverse += 1.0 / v;
    }
    return 1.0 / inverse;
}

} // namespace crgkit
