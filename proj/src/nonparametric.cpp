#include "specest/nonparametric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specest/errors.hpp"
#include "specest/kernels.hpp"
#include "specest/signal.hpp"

namespace specest {

double bartlett_window(int k, int M) {
    if (M < 1)
        throw std::invalid_argument("bartlett_window: M must be >= 1");
    const int m = k < 0 ? -k : k;
    if (m > M)
        return 0.0;
    return 1.0 - static_cast<double>(m) / static_cast<double>(M);
}

double parzen_window(int k, int M) {
    if (M < 1)
        throw std::invalid_argument("parzen_window: M must be >= 1");
    const int m = k < 0 ? -k : k;
    if (m > M)
        return 0.0;
    const double u = static_cast<double>(m) / static_cast<double>(M);
    if (u <= 0.5)
        return 1.0 - 6.0 * u * u + 6.0 * u * u * u;
    const double t = 1.0 - u;
    return 2.0 * t * t * t;
}

PowerSpectrum periodogram(const RealSignal& x, const FrequencyGrid& grid) {
    if (x.size() < 2)
        throw std::invalid_argument("periodogram: need at least 2 samples");

    const AutocorrSeq r = sample_autocorrelation(x, static_cast<int>(x.size()) - 1);
    PowerSpectrum ps{grid, std::vector<double>(grid.size()), {}};
    kernels::cosine_lag_spectrum(r.values(), grid.points(), ps.values);

    const double peak = *std::max_element(ps.values.begin(), ps.values.end());
    const double tol = 1e-9 * std::max(peak, 0.0);
    for (double& v : ps.values)
        if (v < 0.0 && v >= -tol)
            v = 0.0;

    ps.info.estimator = "periodogram";
    return ps;
}

PowerSpectrum blackman_tukey(const AutocorrSeq& r, const LagWindow& window,
                             const FrequencyGrid& grid) {
    const int M = window.half_width;
    if (M < 1)
        throw std::invalid_argument("blackman_tukey: half_width must be >= 1");
    if (r.max_lag() < M)
        throw InsufficientLags("blackman_tukey: window half-width " + std::to_string(M) +
                               " exceeds max lag " + std::to_string(r.max_lag()));

    std::vector<double> c(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k)
        c[static_cast<std::size_t>(k)] = window.value(k) * r.at(k);

    PowerSpectrum ps{grid, std::vector<double>(grid.size()), {}};
    kernels::cosine_lag_spectrum(c, grid.points(), ps.values);
    ps.info.estimator = "blackman_tukey";
    ps.info.order = M;
    ps.info.window = window.name();
    return ps;
}

} // namespace specest
