#pragma once

// "start:step:end" grids and comma-separated lists for the command line.

#include <crgkit/errors.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace crgkit {

namespace detail {

    inline auto parse_real(const std::string & s) -> double
    {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        }
        catch (const std::exception &) {
            throw InvalidInput("not a number: '" + s + "'");
        }
        if (used != s.size() || !std::isfinite(v))
            throw InvalidInput("not a number: '" + s + "'");
        return v;
    }

    inline auto split(const std::string & s, char sep) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::size_t from = 0;
        for (;;) {
            const auto at = s.find(sep, from);
            out.push_back(s.substr(from, at - from));
            if (at == std::string::npos)
                return out;
            from = at + 1;
        }
    }

} // namespace detail

/// Points start, start+step, ... up to end inclusive (end is hit when it
/// lies within 1e-9 steps). Values are rounded to 12 decimals so that
/// 0.1-style steps land on the intended decimals.
inline auto parse_grid(const std::string & spec) -> std::vector<double>
{
    const auto parts = detail::split(spec, ':');
    if (parts.size() != 3)
        throw InvalidInput("grid must be start:step:end, got '" + spec + "'");
    const double start = detail::parse_real(parts[0]);
    const double step = detail::parse_real(parts[1]);
    const double end = detail::parse_real(parts[2]);
    if (!(step > 0.0))
        throw InvalidInput("grid step must be positive");
    if (start > end)
        throw InvalidInput("grid start must not exceed end");
    const auto count = static_cast<std::int64_t>(std::floor((end - start) / step + 1e-9)) + 1;
    if (count > 10'000'000)
        throw InvalidInput("grid has too many points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    return out;
}

inline auto parse_int_list(const std::string & spec) -> std::vector<long long>
{
    std::vector<long long> out;
    for (const auto & item : detail::split(spec, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        }
        catch (const std::exception &) {
            throw InvalidInput("not an integer: '" + item + "'");
        }
        if (used != item.size())
            throw InvalidInput("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

/// "k" alone means seeds 1..k; "a,b,c" is an explicit list.
inline auto parse_seeds(const std::string & spec) -> std::vector<std::uint64_t>
{
    const auto values = parse_int_list(spec);
    std::vector<std::uint64_t> out;
    if (values.size() == 1 && spec.find(',') == std::string::npos) {
        if (values[0] < 1)
            throw InvalidInput("seed count must be at least 1");
        for (long long s = 1; s <= values[0]; ++s)
            out.push_back(static_cast<std::uint64_t>(s));
        return out;
    }
    for (auto v : values) {
        if (v < 0)
            throw InvalidInput("seeds must be non-negative");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

} // namespace crgkit
