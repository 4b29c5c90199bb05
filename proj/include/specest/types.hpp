#ifndef SPECEST_TYPES_HPP
#define SPECEST_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace specest {

/// Finite real-valued sample sequence, index origin 0.
class RealSignal {
public:
    /// Throws std::invalid_argument if empty or any sample is non-finite.
    explicit RealSignal(std::vector<double> samples);

    const std::vector<double>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double operator[](std::size_t n) const noexcept { return samples_[n]; }

private:
    std::vector<double> samples_;
};

enum class AcfSource { Estimated, Exact };

/// Lag-indexed autocorrelation values r(0..K). Negative lags are implied by
/// symmetry r(-k) = r(k) and never stored.
class AutocorrSeq {
public:
    /// Throws std::invalid_argument unless r(0) >= 0 and |r(k)| <= r(0)
    /// (up to a small rounding slack).
    AutocorrSeq(std::vector<double> values, AcfSource source);

    const std::vector<double>& values() const noexcept { return values_; }
    int max_lag() const noexcept { return static_cast<int>(values_.size()) - 1; }
    AcfSource source() const noexcept { return source_; }

    /// r(k) for any lag, folding negative lags by symmetry.
    double at(int k) const;

private:
    std::vector<double> values_;
    AcfSource source_;
};

enum class ScenarioKind { TwoToneAwgn, ExactAcf, HiddenInSound };

/// Named parameter bundle for one bench case.
///
/// For HiddenInSound, `a` is the embedded tone amplitude, `f1` the tone
/// frequency, `n` the analysis length and `seed` the carrier seed; `b` and
/// `f2` are unused (f2 only has to satisfy the f1 != f2 invariant).
struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::TwoToneAwgn;
    double a = 0.0;
    double b = 0.0;
    double f1 = 0.0; // cycles/sample, in (0, 0.5)
    double f2 = 0.0; // cycles/sample, in (0, 0.5), distinct from f1
    int order = 1;   // estimator order (M or p)
    int n = 0;       // sample count / analysis length (unused for ExactAcf)
    double noise_variance = 0.0;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on non-finite parameters, frequencies
    /// outside (0, 0.5), f1 == f2, negative noise variance or order < 1.
    void validate() const;
};

/// Ordered frequencies in cycles/sample on [0, 0.5].
class FrequencyGrid {
public:
    /// Throws std::invalid_argument unless points are strictly increasing
    /// and inside [0, 0.5].
    explicit FrequencyGrid(std::vector<double> points);

    /// count uniform points covering [0, 0.5] inclusive (count >= 2).
    static FrequencyGrid uniform(std::size_t count = kDefaultSize);

    static constexpr std::size_t kDefaultSize = 1024;

    const std::vector<double>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const noexcept { return points_[i]; }
    /// Spacing between consecutive points of a uniform grid.
    double step() const noexcept;

private:
    std::vector<double> points_;
};

enum class ArMethod { YuleWalker, ModifiedCovariance };

/// All-pole model x(n) = -sum a(k) x(n-k) + e(n), driving variance rho.
/// Order 0 (no coefficients) describes plain white noise.
struct ArModel {
    int order = 0;
    std::vector<double> a; // a(1..order), stored a[0] = a(1)
    double rho = 0.0;      // >= 0, power units
    ArMethod method = ArMethod::YuleWalker;
};

/// Estimator provenance attached to a spectrum.
struct SpectrumInfo {
    std::string estimator; // "periodogram", "capon", ...
    int order = 0;         // M or p; 0 when not applicable
    std::string window;    // lag window name, empty when not applicable
    // Grid indices where the AR denominator underflowed and the value was
    // capped (poles sitting on the unit circle at a grid point).
    std::vector<std::size_t> capped_points;
};

/// Frequency grid paired with power density values (linear units).
struct PowerSpectrum {
    FrequencyGrid grid;
    std::vector<double> values;
    SpectrumInfo info;
};

enum class WindowKind { Rectangular, Bartlett, Parzen };

/// Even lag window w(k), w(0) = 1, zero beyond |k| > half_width.
struct LagWindow {
    WindowKind kind = WindowKind::Rectangular;
    int half_width = 1; // M >= 1

    double value(int k) const;
    std::string name() const;
};

} // namespace specest

#endif // SPECEST_TYPES_HPP
