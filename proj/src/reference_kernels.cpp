#include "specest/kernels.hpp"

#include <cassert>
#include <stdexcept>

#include "kernel_detail.hpp"

namespace specest::kernels::reference {

void autocorr_biased(std::span<const double> x, int max_lag, std::span<double> out) {
    assert(out.size() == static_cast<std::size_t>(max_lag) + 1);
    for (int k = 0; k <= max_lag; ++k)
        out[static_cast<std::size_t>(k)] = detail::lag_product(x, k);
}

void cosine_lag_spectrum(std::span<const double> c, std::span<const double> freqs,
                         std::span<double> out) {
    assert(!c.empty() && out.size() == freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        out[i] = detail::point_cosine_lag(c, freqs[i]);
}

void ar_spectrum_eval(double rho, std::span<const double> a,
                      std::span<const double> freqs, std::span<double> out,
                      std::span<unsigned char> capped, double floor_value) {
    assert(out.size() == freqs.size() && capped.size() == freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        out[i] = detail::point_ar(rho, a, freqs[i], floor_value, capped[i]);
}

void capon_eval(std::span<const double> chol_lower, int m,
                std::span<const double> freqs, std::span<double> out) {
    assert(out.size() == freqs.size());
    assert(chol_lower.size() == static_cast<std::size_t>(m) * m);
    if (m < 1 || m > detail::kCaponMaxOrder)
        throw std::invalid_argument("capon_eval: order outside [1, 64]");
    for (std::size_t i = 0; i < freqs.size(); ++i)
        out[i] = detail::point_capon(chol_lower, m, freqs[i]);
}

} // namespace specest::kernels::reference
