#ifndef SPECEST_KERNEL_DETAIL_HPP
#define SPECEST_KERNEL_DETAIL_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>

// Scalar per-point bodies shared by the OpenMP kernels and their serial
// reference twins. Keeping a single definition of the arithmetic makes the
// two variants bitwise-comparable: they differ only in how the outer loop
// over points is driven.

namespace specest::kernels::detail {

inline double lag_product(std::span<const double> x, int k) {
    const std::size_t n = x.size();
    const std::size_t lag = static_cast<std::size_t>(k);
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i)
        acc += x[i] * x[i + lag];
    return acc / static_cast<double>(n);
}

inline double point_cosine_lag(std::span<const double> c, double f) {
    const double w = 2.0 * std::numbers::pi * f;
    double acc = c[0];
    for (std::size_t k = 1; k < c.size(); ++k)
        acc += 2.0 * c[k] * std::cos(w * static_cast<double>(k));
    return acc;
}

inline double point_ar(double rho, std::span<const double> a, double f,
                       double floor_value, unsigned char& capped) {
    const double w = 2.0 * std::numbers::pi * f;
    double re = 1.0;
    double im = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double phase = w * static_cast<double>(k + 1);
        re += a[k] * std::cos(phase);
        im -= a[k] * std::sin(phase);
    }
    const double denom = re * re + im * im;
    if (denom < floor_value) {
        capped = 1;
        const double v = rho / floor_value;
        return std::isfinite(v) ? v : std::numeric_limits<double>::max();
    }
    capped = 0;
    return rho / denom;
}

inline double point_capon(std::span<const double> chol_lower, int m, double f) {
    // Solve L y = e(f) by forward substitution, e(f)_k = exp(-j 2 pi f k),
    // then S = 1 / ||y||^2. Stack buffer keeps the point function allocation
    // free; orders here are small (the solver rejects m > 64 upstream).
    constexpr int kMaxOrder = 64;
    std::complex<double> y[kMaxOrder];
    const double w = 2.0 * std::numbers::pi * f;
    double norm2 = 0.0;
    for (int i = 0; i < m; ++i) {
        const double phase = w * static_cast<double>(i);
        std::complex<double> acc(std::cos(phase), -std::sin(phase));
        const double* row = chol_lower.data() + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < i; ++j)
            acc -= row[j] * y[j];
        y[i] = acc / row[i];
        norm2 += std::norm(y[i]);
    }
    return 1.0 / norm2;
}

inline constexpr int kCaponMaxOrder = 64;

} // namespace specest::kernels::detail

#endif // SPECEST_KERNEL_DETAIL_HPP
