#include "specest/steganalysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "specest/errors.hpp"
#include "specest/nonparametric.hpp"
#include "specest/parametric.hpp"
#include "specest/signal.hpp"

namespace specest {

std::string EstimatorSpec::name() const {
    switch (method) {
    case Method::Periodogram:
        return "periodogram";
    case Method::BlackmanTukey:
        return "blackman_tukey";
    case Method::Capon:
        return "capon";
    case Method::YuleWalker:
        return "yule_walker";
    case Method::ModCov:
        return "modcov";
    }
    return "";
}

AudioCarrier synth_carrier(std::uint64_t seed, int length) {
    if (length < 32)
        throw std::invalid_argument("synth_carrier: length must be >= 32");

    constexpr int kWarmup = 200;
    NormalSampler rng(seed);
    const int total = kWarmup + length;
    std::vector<double> y(static_cast<std::size_t>(total), 0.0);
    double y1 = 0.0;
    double y2 = 0.0;
    for (int n = 0; n < total; ++n) {
        const double u = rng.uniform01() - 0.5;
        const double v = 1.2 * y1 - 0.52 * y2 + u;
        y[static_cast<std::size_t>(n)] = v;
        y2 = y1;
        y1 = v;
    }
    y.erase(y.begin(), y.begin() + kWarmup);

    double peak = 0.0;
    for (double v : y)
        peak = std::max(peak, std::abs(v));
    const double scale = 0.8 / peak;
    for (double& v : y)
        v *= scale;

    AudioCarrier carrier;
    carrier.samples = std::move(y);
    carrier.origin = SyntheticOrigin{seed};
    return carrier;
}

StegoPackage embed(const AudioCarrier& carrier, double f, double amplitude,
                   int analysis_length) {
    if (!(f > 0.0 && f < 0.5))
        throw std::invalid_argument("embed: frequency must lie in (0, 0.5)");
    if (!std::isfinite(amplitude))
        throw std::invalid_argument("embed: non-finite amplitude");
    if (analysis_length < 1 ||
        static_cast<std::size_t>(analysis_length) > carrier.samples.size())
        throw std::invalid_argument("embed: analysis_length outside [1, carrier length]");

    const double w = 2.0 * std::numbers::pi * f;
    std::vector<double> stego(static_cast<std::size_t>(analysis_length));
    for (int n = 0; n < analysis_length; ++n)
        stego[static_cast<std::size_t>(n)] =
            amplitude * std::cos(w * static_cast<double>(n)) +
            carrier.samples[static_cast<std::size_t>(n)];

    return StegoPackage{RealSignal(std::move(stego)), f, amplitude, carrier.origin,
                        analysis_length};
}

DetectionReport detect(const StegoPackage& pkg, const EstimatorSpec& estimator,
                       const FrequencyGrid& grid, bool keep_spectrum) {
    DetectionReport report;
    report.estimator = estimator.name();
    report.order = estimator.method == Method::Periodogram ? 0 : estimator.order;
    report.estimated_frequency = std::numeric_limits<double>::quiet_NaN();
    report.absolute_error = std::numeric_limits<double>::quiet_NaN();
    report.peak_value = std::numeric_limits<double>::quiet_NaN();

    try {
        const int len = pkg.analysis_length;
        if (len < 1 || static_cast<std::size_t>(len) > pkg.stego.size())
            throw std::invalid_argument("detect: bad analysis_length");
        RealSignal x(std::vector<double>(pkg.stego.samples().begin(),
                                         pkg.stego.samples().begin() + len));

        PowerSpectrum ps = [&]() -> PowerSpectrum {
            switch (estimator.method) {
            case Method::Periodogram:
                return periodogram(x, grid);
            case Method::BlackmanTukey: {
                const AutocorrSeq r = sample_autocorrelation(x, estimator.order);
                return blackman_tukey(r, LagWindow{estimator.window, estimator.order}, grid);
            }
            case Method::Capon: {
                const AutocorrSeq r = sample_autocorrelation(x, estimator.order - 1);
                return capon_spectrum(r, estimator.order, grid);
            }
            case Method::YuleWalker: {
                const AutocorrSeq r = sample_autocorrelation(x, estimator.order);
                return yule_walker_spectrum(r, estimator.order, grid).second;
            }
            case Method::ModCov:
                return modcov_spectrum(x, estimator.order, grid).second;
            }
            throw std::logic_error("detect: unknown method");
        }();

        // Argmax over [2/len, 0.5); the shaped carrier parks most of its
        // power right above DC, and f = 0.5 mirrors negative frequencies.
        const double lo = 2.0 / static_cast<double>(len);
        bool found = false;
        std::size_t best = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double f = grid[i];
            if (f < lo || f >= 0.5)
                continue;
            if (!found || ps.values[i] > ps.values[best]) {
                best = i;
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument("detect: no grid points in [2/len, 0.5)");

        report.estimated_frequency = grid[best];
        report.peak_value = ps.values[best];
        if (pkg.true_frequency)
            report.absolute_error = std::abs(report.estimated_frequency - *pkg.true_frequency);
        if (keep_spectrum)
            report.spectrum = std::move(ps);
    } catch (const std::exception& e) {
        report.error = e.what();
    }
    return report;
}

} // namespace specest
