#pragma once

// Small dense linear algebra: symmetric matrices, a cyclic Jacobi
// eigensolver and a pivoted Gaussian solve. Sized for n <= 64.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace crgkit {

/// Row-major square matrix. Only used for symmetric data here, but the
/// type does not enforce symmetry.
class Matrix
{
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    auto size() const noexcept -> std::size_t { return n_; }
    auto operator()(std::size_t i, std::size_t j) -> double & { return a_[i * n_ + j]; }
    auto operator()(std::size_t i, std::size_t j) const -> double { return a_[i * n_ + j]; }

    auto operator==(const Matrix &) const -> bool = default;

    auto apply(std::span<const double> x) const -> std::vector<double>
    {
        std::vector<double> y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n_; ++j)
                s += a_[i * n_ + j] * x[j];
            y[i] = s;
        }
        return y;
    }

    auto quadratic_form(std::span<const double> x) const -> double
    {
        double s = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n_; ++j)
                row += a_[i * n_ + j] * x[j];
            s += x[i] * row;
        }
        return s;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition
{
    std::vector<double> values;            // ascending
    std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k], unit norm
};

/// Cyclic Jacobi rotations on a symmetric matrix. Iterates until the
/// off-diagonal Frobenius mass drops below `tol` (absolute).
inline auto symmetric_eigen(Matrix a, double tol = 1e-12, int max_sweeps = 100) -> EigenDecomposition
{
    const std::size_t n = a.size();
    Matrix v(n);
    for (std::size_t i = 0; i < n; ++i)
        v(i, i) = 1.0;

    auto off_mass = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps && off_mass() >= tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (auto k : order) {
        out.values.push_back(a(k, k));
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i)
            col[i] = v(i, k);
        out.vectors.push_back(std::move(col));
    }
    return out;
}

/// Gaussian elimination with partial pivoting. Returns nullopt when a pivot
/// falls below `pivot_tol` times the largest entry of the matrix.
inline auto solve_linear(Matrix a, std::vector<double> b, double pivot_tol = 1e-10) -> std::optional<std::vector<double>>
{
    const std::size_t n = a.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0)
        return std::nullopt;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col)))
                piv = r;
        if (std::abs(a(piv, col)) < pivot_tol * scale)
            return std::nullopt;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(col, j), a(piv, j));
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

/// Minimum-norm least-squares solve of a symmetric system through its
/// eigendecomposition; eigenvalues with |lambda| <= cutoff are dropped.
inline auto symmetric_pseudo_solve(const Matrix & a, std::span<const double> b, double cutoff = 1e-10) -> std::vector<double>
{
    const auto eig = symmetric_eigen(a);
    const std::size_t n = a.size();
    std::vector<double> x(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(eig.values[k]) <= cutoff)
            continue;
        const auto & v = eig.vectors[k];
        const double coeff = std::inner_product(v.begin(), v.end(), b.begin(), 0.0) / eig.values[k];
        for (std::size_t i = 0; i < n; ++i)
            x[i] += coeff * v[i];
    }
    return x;
}

} // namespace crgkit
