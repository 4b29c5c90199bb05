#include "specest/kernels.hpp"

#include <cassert>
#include <stdexcept>

#include "kernel_detail.hpp"

namespace specest::kernels {

void autocorr_biased(std::span<const double> x, int max_lag, std::span<double> out) {
    assert(out.size() == static_cast<std::size_t>(max_lag) + 1);
    const int lags = max_lag + 1;
#pragma omp parallel for schedule(static)
    for (int k = 0; k < lags; ++k)
        out[static_cast<std::size_t>(k)] = detail::lag_product(x, k);
}

void cosine_lag_spectrum(std::span<const double> c, std::span<const double> freqs,
                         std::span<double> out) {
    assert(!c.empty() && out.size() == freqs.size());
    const std::int64_t n = static_cast<std::int64_t>(freqs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            detail::point_cosine_lag(c, freqs[static_cast<std::size_t>(i)]);
}

void ar_spectrum_eval(double rho, std::span<const double> a,
                      std::span<const double> freqs, std::span<double> out,
                      std::span<unsigned char> capped, double floor_value) {
    assert(out.size() == freqs.size() && capped.size() == freqs.size());
    const std::int64_t n = static_cast<std::int64_t>(freqs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        out[idx] = detail::point_ar(rho, a, freqs[idx], floor_value, capped[idx]);
    }
}

void capon_eval(std::span<const double> chol_lower, int m,
                std::span<const double> freqs, std::span<double> out) {
    assert(out.size() == freqs.size());
    assert(chol_lower.size() == static_cast<std::size_t>(m) * m);
    if (m < 1 || m > detail::kCaponMaxOrder)
        throw std::invalid_argument("capon_eval: order outside [1, 64]");
    const std::int64_t n = static_cast<std::int64_t>(freqs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        out[idx] = detail::point_capon(chol_lower, m, freqs[idx]);
    }
}

} // namespace specest::kernels
