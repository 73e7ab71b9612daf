#pragma once

// Forbidding a random graph F ~ G(n0, p0): exact edit distances at desk
// scale against the asymptotic formula. Only ratios, sandwiches and trends
// are reported; nothing here claims convergence.

#include <crgkit/edfun.hpp>
#include <crgkit/errors.hpp>
#include <crgkit/graph.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace crgkit {

/// (2 ln n0 / n0) * min{ p / -ln(1-p0), (1-p) / -ln p0 }.
inline auto asymptotic_formula(int n0, double p0, double p) -> double
{
    if (n0 < 2)
        throw InvalidInput("asymptotic_formula needs n0 >= 2");
    if (!(p0 > 0.0 && p0 < 1.0))
        throw InvalidInput("asymptotic_formula needs p0 in (0,1)");
    check_probability(p);
    const double scale = 2.0 * std::log(static_cast<double>(n0)) / n0;
    return scale * std::min(p / -std::log1p(-p0), (1.0 - p) / -std::log(p0));
}

/// min{ p/(chi(F)-1), (1-p)/(chi(F^c)-1) }, from (chi(F)-1) copies of D_inf
/// and (chi(F^c)-1) copies of D_1, neither of which admits F. A branch with
/// chi = 1 has no such witness and is left out; with neither branch the
/// bound is the trivial 1.
inline auto chromatic_upper_bound(int chi, int chi_c, double p) -> double
{
    check_probability(p);
    double best = 1.0;
    if (chi >= 2)
        best = std::min(best, p / (chi - 1));
    if (chi_c >= 2)
        best = std::min(best, (1.0 - p) / (chi_c - 1));
    return best;
}

inline auto chromatic_upper_bound(const Graph & f, double p, Limits limits = {}) -> double
{
    return chromatic_upper_bound(chromatic_number(f, limits.chromatic), chromatic_number(complement(f), limits.chromatic), p);
}

struct ExperimentRecord
{
    std::uint64_t seed = 0;
    int n0 = 0;
    double p0 = 0.0;
    double p = 0.0;
    double ed_value = std::numeric_limits<double>::quiet_NaN();
    Validity validity = Validity::UpperBound;
    double asymptotic = 0.0;
    std::optional<double> ratio;    // only for EXACT rows
    int chi_F = -1;                 // -1 when over the colouring cap
    int chi_Fc = -1;
};

struct ExperimentPlan
{
    std::vector<int> n0_list;
    double p0 = 0.5;
    std::vector<double> p_grid;
    std::vector<std::uint64_t> seeds;
    Limits limits;
    unsigned workers = 1;
};

namespace detail {

    inline auto experiment_rows(int n0, std::uint64_t seed, const ExperimentPlan & plan) -> std::vector<ExperimentRecord>
    {
        const Graph f = sample_gnp(n0, plan.p0, seed);
        std::vector<ExperimentRecord> rows;

        int chi = -1, chi_c = -1;
        if (n0 <= plan.limits.chromatic) {
            chi = chromatic_number(f, plan.limits.chromatic);
            chi_c = chromatic_number(complement(f), plan.limits.chromatic);
        }
        std::optional<EditDistance> ed;
        if (n0 >= 2 && n0 <= plan.limits.ed_exact)
            ed.emplace(f, plan.limits);

        for (double p : plan.p_grid) {
            ExperimentRecord r;
            r.seed = seed;
            r.n0 = n0;
            r.p0 = plan.p0;
            r.p = p;
            r.chi_F = chi;
            r.chi_Fc = chi_c;
            r.asymptotic = asymptotic_formula(n0, plan.p0, p);
            if (ed) {
                const auto e = ed->at(p);
                r.ed_value = e.value;
                r.validity = e.validity;
            }
            else if (chi >= 0) {
                r.ed_value = chromatic_upper_bound(chi, chi_c, p);
                r.validity = Validity::UpperBound;
            }
            if (r.validity == Validity::Exact && r.asymptotic > 0.0)
                r.ratio = r.ed_value / r.asymptotic;
            rows.push_back(r);
        }
        return rows;
    }

} // namespace detail

/// One task per (n0, seed); results are merged and sorted by (n0, seed, p)
/// so the worker count never changes the output.
inline auto run_experiment(const ExperimentPlan & plan) -> std::vector<ExperimentRecord>
{
    if (!(plan.p0 > 0.0 && plan.p0 < 1.0))
        throw InvalidInput("run_experiment needs p0 in (0,1)");
    for (int n0 : plan.n0_list)
        if (n0 < 2)
            throw InvalidInput("run_experiment needs n0 >= 2");

    std::vector<std::pair<int, std::uint64_t>> tasks;
    for (int n0 : plan.n0_list)
        for (auto s : plan.seeds)
            tasks.emplace_back(n0, s);
    std::vector<std::vector<ExperimentRecord>> results(tasks.size());

    const unsigned workers = std::max(1U, std::min<unsigned>(plan.workers, static_cast<unsigned>(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = detail::experiment_rows(tasks[i].first, tasks[i].second, plan);
    }
    else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < tasks.size(); i += workers)
                        results[i] = detail::experiment_rows(tasks[i].first, tasks[i].second, plan);
                }
                catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto & t : pool)
            t.join();
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::vector<ExperimentRecord> all;
    for (auto & r : results)
        all.insert(all.end(), r.begin(), r.end());
    std::stable_sort(all.begin(), all.end(), [](const auto & a, const auto & b) {
        return std::tie(a.n0, a.seed, a.p) < std::tie(b.n0, b.seed, b.p);
    });
    return all;
}

/// Twelve significant digits; NaN prints as an empty field.
inline auto format_real(double v) -> std::string
{
    if (std::isnan(v))
        return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline constexpr const char * experiment_csv_header = "seed,n0,p0,p,ed,validity,asymptotic,ratio,chi_F,chi_Fc";

inline void write_experiment_csv(std::ostream & out, const std::vector<ExperimentRecord> & rows)
{
    out << experiment_csv_header << '\n';
    auto chi = [](int c) { return c < 0 ? std::string() : std::to_string(c); };
    for (const auto & r : rows)
        out << r.seed << ',' << r.n0 << ',' << format_real(r.p0) << ',' << format_real(r.p) << ','
            << format_real(r.ed_value) << ',' << validity_name(r.validity) << ',' << format_real(r.asymptotic) << ','
            << (r.ratio ? format_real(*r.ratio) : std::string()) << ',' << chi(r.chi_F) << ',' << chi(r.chi_Fc) << '\n';
}

inline auto median(std::vector<double> v) -> double
{
    if (v.empty())
        return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace crgkit
