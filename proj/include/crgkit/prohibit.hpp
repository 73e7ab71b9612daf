#pragma once

// Certificates that a CRG occurs in no p-core CRG. Everything here is a
// sufficient condition: "no certificate" never means "not prohibited".

#include <crgkit/crg.hpp>
#include <crgkit/gfun.hpp>
#include <crgkit/graph.hpp>
#include <crgkit/linalg.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace crgkit {

enum class CertificateKind
{
    EigenInterval,
    DeltaVector,
};

struct ProhibitionCertificate
{
    CertificateKind kind = CertificateKind::EigenInterval;

    // EigenInterval
    double lambda = 0.0;
    double lo = 0.0;
    double hi = 0.0;

    // DeltaVector
    std::vector<double> delta;    // sum zero, unit norm
    double value = 0.0;           // <delta, M delta>
    double p = 0.0;
};

/// For a nonempty G with least adjacency eigenvalue lambda (always <= -1),
/// the associated CRG is p-prohibited on [1/(1-lambda), 1 - 1/(1-lambda)].
inline auto eigen_prohibition_interval(const Graph & g) -> ProhibitionCertificate
{
    if (g.edge_count() == 0)
        throw InvalidInput("eigen_prohibition_interval needs a graph with at least one edge");
    ProhibitionCertificate c;
    c.kind = CertificateKind::EigenInterval;
    c.lambda = min_adjacency_eigenvalue(g);
    if (c.lambda > -1.0 + 1e-9)
        throw ContractError("least eigenvalue above -1 for a nonempty graph");
    c.lambda = std::min(c.lambda, -1.0);
    c.lo = 1.0 / (1.0 - c.lambda);
    c.hi = 1.0 - c.lo;
    return c;
}

/// Orthonormal basis of the hyperplane orthogonal to the all-ones vector
/// (Helmert vectors), as columns.
inline auto ones_complement_basis(std::size_t n) -> std::vector<std::vector<double>>
{
    std::vector<std::vector<double>> basis;
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> v(n, 0.0);
        const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
        for (std::size_t i = 0; i < k; ++i)
            v[i] = s;
        v[k] = -static_cast<double>(k) * s;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Minimum of <delta, M_J(p) delta> over unit delta orthogonal to 1, by a
/// symmetric eigensolve of M projected onto that hyperplane. Returns a
/// certificate when the minimum is <= 1e-12.
inline auto delta_test(const Crg & j, double p) -> std::optional<ProhibitionCertificate>
{
    check_probability(p);
    const auto n = static_cast<std::size_t>(j.order());
    if (n < 2)
        return std::nullopt;
    const Matrix m = matrix_M(j, p);
    const auto q = ones_complement_basis(n);
    const std::size_t r = q.size();

    Matrix projected(r);
    std::vector<std::vector<double>> mq;
    for (std::size_t b = 0; b < r; ++b)
        mq.push_back(m.apply(q[b]));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += q[a][i] * mq[b][i];
            projected(a, b) = projected(b, a) = s;
        }

    const auto eig = symmetric_eigen(projected);
    if (eig.values.front() > 1e-12)
        return std::nullopt;

    ProhibitionCertificate c;
    c.kind = CertificateKind::DeltaVector;
    c.p = p;
    c.delta.assign(n, 0.0);
    for (std::size_t b = 0; b < r; ++b)
        for (std::size_t i = 0; i < n; ++i)
            c.delta[i] += eig.vectors.front()[b] * q[b][i];
    c.value = m.quadratic_form(c.delta);
    return c;
}

struct DoubledConstruction
{
    Crg doubled;                  // two gray-separated copies of the associated CRG
    std::vector<double> delta;    // (x, -x) with x a unit least eigenvector of A(G)
    double lambda = 0.0;
    double value = 0.0;           // <delta, M delta>
    double predicted = 0.0;       // closed form of the same quantity
};

/// The two-copy construction: delta = x on the first copy and -x on the
/// second, where A(G) x = lambda x. Then <delta, M delta> equals
/// 2(1 - (1-lambda) p)|x|^2 for p <= 1/2 and 2(p + (1-p) lambda)|x|^2
/// above 1/2.
inline auto doubled_delta_construction(const Graph & g, double p) -> DoubledConstruction
{
    if (!(p > 0.0 && p < 1.0))
        throw InvalidInput("doubled_delta_construction needs p in (0,1)");
    const auto j = associated_crg(g, p);
    const auto eig = symmetric_eigen(adjacency_matrix(g));
    const auto & x = eig.vectors.front();

    DoubledConstruction out;
    out.doubled = repeat(j, 2);
    out.lambda = eig.values.front();
    out.delta.reserve(2 * x.size());
    for (double v : x)
        out.delta.push_back(v);
    for (double v : x)
        out.delta.push_back(-v);
    out.value = matrix_M(out.doubled, p).quadratic_form(out.delta);
    out.predicted = p <= 0.5 ? 2.0 * (1.0 - (1.0 - out.lambda) * p) : 2.0 * (p + (1.0 - p) * out.lambda);
    return out;
}

struct PathTableRow
{
    int d = 0;
    double lo = 0.0;
    double hi = 0.0;
};

/// Lower end of the interval on which the CRG of P_d is certified
/// prohibited: 1 / (1 + 2 cos(pi/(d+1))).
inline auto path_prohibition_lo(int d) -> double
{
    if (d < 2)
        throw InvalidInput("path_prohibition_lo needs d >= 2");
    return 1.0 / (1.0 + 2.0 * std::cos(std::numbers::pi / (d + 1)));
}

inline auto path_prohibition_table(int d_max) -> std::vector<PathTableRow>
{
    if (d_max < 3)
        throw InvalidInput("path_prohibition_table needs d_max >= 3");
    std::vector<PathTableRow> rows;
    for (int d = 3; d <= d_max; ++d) {
        const double lo = path_prohibition_lo(d);
        rows.push_back({d, lo, 1.0 - lo});
    }
    return rows;
}

/// The golden-ratio interval [1 - 1/phi, 1/phi].
inline constexpr double golden_lo = 0.38196601125010515;    // (3 - sqrt 5) / 2
inline constexpr double golden_hi = 0.6180339887498949;     // (sqrt 5 - 1) / 2

} // namespace crgkit
