#include "specest/types.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace specest {

RealSignal::RealSignal(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty())
        throw std::invalid_argument("RealSignal: at least one sample required");
    for (double s : samples_)
        if (!std::isfinite(s))
            throw std::invalid_argument("RealSignal: non-finite sample");
}

AutocorrSeq::AutocorrSeq(std::vector<double> values, AcfSource source)
    : values_(std::move(values)), source_(source) {
    if (values_.empty())
        throw std::invalid_argument("AutocorrSeq: lag 0 value required");
    const double r0 = values_[0];
    if (!std::isfinite(r0) || r0 < 0.0)
        throw std::invalid_argument("AutocorrSeq: r(0) must be finite and >= 0");
    // Rounding slack on the |r(k)| <= r(0) bound; both constructions satisfy
    // it exactly in real arithmetic.
    const double bound = r0 * (1.0 + 1e-12) + 1e-300;
    for (double v : values_) {
        if (!std::isfinite(v))
            throw std::invalid_argument("AutocorrSeq: non-finite value");
        if (std::abs(v) > bound)
            throw std::invalid_argument("AutocorrSeq: |r(k)| exceeds r(0)");
    }
}

double AutocorrSeq::at(int k) const {
    const std::size_t idx = static_cast<std::size_t>(k < 0 ? -k : k);
    if (idx >= values_.size())
        throw std::out_of_range("AutocorrSeq::at: lag beyond max_lag");
    return values_[idx];
}

void Scenario::validate() const {
    for (double v : {a, b, f1, f2, noise_variance})
        if (!std::isfinite(v))
            throw std::invalid_argument("Scenario: non-finite parameter");
    if (!(f1 > 0.0 && f1 < 0.5) || !(f2 > 0.0 && f2 < 0.5))
        throw std::invalid_argument("Scenario: frequencies must lie in (0, 0.5)");
    if (f1 == f2)
        throw std::invalid_argument("Scenario: f1 and f2 must differ");
    if (noise_variance < 0.0)
        throw std::invalid_argument("Scenario: negative noise variance");
    if (order < 1)
        throw std::invalid_argument("Scenario: order must be >= 1");
}

FrequencyGrid::FrequencyGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty())
        throw std::invalid_argument("FrequencyGrid: empty");
    double prev = -1.0;
    for (double f : points_) {
        if (!std::isfinite(f) || f < 0.0 || f > 0.5)
            throw std::invalid_argument("FrequencyGrid: point outside [0, 0.5]");
        if (f <= prev)
            throw std::invalid_argument("FrequencyGrid: points must be strictly increasing");
        prev = f;
    }
}

FrequencyGrid FrequencyGrid::uniform(std::size_t count) {
    if (count < 2)
        throw std::invalid_argument("FrequencyGrid::uniform: need at least 2 points");
    std::vector<double> pts(count);
    const double denom = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        pts[i] = 0.5 * static_cast<double>(i) / denom;
    return FrequencyGrid(std::move(pts));
}

double FrequencyGrid::step() const noexcept {
    return points_.size() > 1 ? points_[1] - points_[0] : 0.0;
}

double LagWindow::value(int k) const {
    const int m = k < 0 ? -k : k;
    if (m > half_width)
        return 0.0;
    switch (kind) {
    case WindowKind::Rectangular:
        return 1.0;
    case WindowKind::Bartlett:
        return 1.0 - static_cast<double>(m) / half_width;
    case WindowKind::Parzen: {
        const double u = static_cast<double>(m) / half_width;
        if (u <= 0.5)
            return 1.0 - 6.0 * u * u + 6.0 * u * u * u;
        const double t = 1.0 - u;
        return 2.0 * t * t * t;
    }
    }
    return 0.0;
}

std::string LagWindow::name() const {
    switch (kind) {
    case WindowKind::Rectangular:
        return "rectangular";
    case WindowKind::Bartlett:
        return "bartlett";
    case WindowKind::Parzen:
        return "parzen";
    }
    return "";
}

} // namespace specest
