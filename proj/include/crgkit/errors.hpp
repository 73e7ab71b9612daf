#pragma once

#include <stdexcept>
#include <string>

namespace crgkit {

/// Base of every error thrown by the library. `kind()` is a short
/// machine-parsable tag used by the CLI.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
    virtual auto kind() const noexcept -> const char * = 0;
};

/// An argument outside the documented domain (p outside [0,1], t = 0, ...).
class InvalidInput : public Error
{
public:
    using Error::Error;
    auto kind() const noexcept -> const char * override { return "invalid-input"; }
};

/// Malformed graph / CRG text.
class ParseError : public Error
{
public:
    using Error::Error;
    auto kind() const noexcept -> const char * override { return "parse"; }
};

/// Input too large for one of the exact (exponential) methods.
class CapExceeded : public Error
{
public:
    using Error::Error;
    auto kind() const noexcept -> const char * override { return "cap"; }
};

/// A precondition on the mathematical object was violated, e.g. asking
/// for the degree condition on a CRG that is not p-core.
class ContractError : public Error
{
public:
    using Error::Error;
    auto kind() const noexcept -> const char * override { return "contract"; }
};

/// Exact-computation caps. All are overridable per call site.
struct Limits
{
    int graph_vertices = 64;    // bitset rows
    int chromatic = 40;
    int g_support = 20;         // 2^n face enumeration
    int embed_pattern = 24;
    int ed_exact = 16;
};

} // namespace crgkit
