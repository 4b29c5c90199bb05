#include "specest/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "specest/kernels.hpp"

namespace specest {

double NormalSampler::uniform01() {
    // 53 high bits of the engine output, scaled to [0, 1). Avoids
    // std::uniform_real_distribution, whose output is unspecified across
    // standard library implementations.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalSampler::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller. u1 is flipped to (0, 1] so the log argument is never zero.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

RealSignal synth_two_tone(const Scenario& sc) {
    sc.validate();
    if (sc.kind != ScenarioKind::TwoToneAwgn)
        throw std::invalid_argument("synth_two_tone: scenario is not TwoToneAwgn");
    if (sc.n < 1)
        throw std::invalid_argument("synth_two_tone: sample count must be >= 1");

    NormalSampler noise(sc.seed);
    const double sigma = std::sqrt(sc.noise_variance);
    const double w1 = 2.0 * std::numbers::pi * sc.f1;
    const double w2 = 2.0 * std::numbers::pi * sc.f2;

    std::vector<double> x(static_cast<std::size_t>(sc.n));
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double t = static_cast<double>(n);
        x[n] = sc.a * std::cos(w1 * t) + sc.b * std::cos(w2 * t) + sigma * noise.next();
    }
    return RealSignal(std::move(x));
}

AutocorrSeq sample_autocorrelation(const RealSignal& x, int max_lag) {
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= x.size())
        throw std::invalid_argument("sample_autocorrelation: max_lag outside [0, N-1]");
    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
    kernels::autocorr_biased(x.samples(), max_lag, r);
    return AutocorrSeq(std::move(r), AcfSource::Estimated);
}

AutocorrSeq exact_two_tone_acf(const Scenario& sc, int max_lag) {
    sc.validate();
    if (sc.kind != ScenarioKind::ExactAcf)
        throw std::invalid_argument("exact_two_tone_acf: scenario is not ExactAcf");
    if (max_lag < 0)
        throw std::invalid_argument("exact_two_tone_acf: negative max_lag");

    const double w1 = 2.0 * std::numbers::pi * sc.f1;
    const double w2 = 2.0 * std::numbers::pi * sc.f2;
    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
    for (std::size_t k = 0; k < r.size(); ++k) {
        const double t = static_cast<double>(k);
        r[k] = sc.a * std::cos(w1 * t) + sc.b * std::cos(w2 * t);
    }
    r[0] += 1.0;
    return AutocorrSeq(std::move(r), AcfSource::Exact);
}

} // namespace specest
