#ifndef SPECEST_STEGANALYSIS_HPP
#define SPECEST_STEGANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "specest/types.hpp"
#include "specest/wav.hpp"

namespace specest {

/// A carrier with an added sinusoid, ready for detection.
struct StegoPackage {
    RealSignal stego;
    std::optional<double> true_frequency; // cycles/sample, in (0, 0.5) when known
    double amplitude = 0.0;
    CarrierOrigin carrier_origin = SyntheticOrigin{0};
    int analysis_length = 0;
};

/// Which spectrum drives the detection.
enum class Method { Periodogram, BlackmanTukey, Capon, YuleWalker, ModCov };

struct EstimatorSpec {
    Method method = Method::ModCov;
    int order = 10;                           // M or p; ignored by the periodogram
    WindowKind window = WindowKind::Bartlett; // Blackman-Tukey only

    std::string name() const;
};

struct DetectionReport {
    std::string estimator;
    int order = 0;
    double estimated_frequency = 0.0; // grid point
    double absolute_error = 0.0;      // NaN when the true frequency is unknown
    double peak_value = 0.0;
    std::optional<PowerSpectrum> spectrum;
    std::string error; // nonempty when the estimator failed; other fields unset
};

/// Deterministic stand-in for a recorded voice snippet: seeded uniform noise
/// shaped by y(n) = 1.2 y(n-1) - 0.52 y(n-2) + u(n) (a 200-sample warm-up is
/// discarded), peak-normalized to 0.8. The output is correlated sample to
/// sample and visibly non-Gaussian, which is what the detection experiments
/// need from a carrier. length >= 32.
AudioCarrier synth_carrier(std::uint64_t seed, int length);

/// stego(n) = amplitude * cos(2 pi f n) + carrier(n) over the first
/// analysis_length samples. The sum is not re-normalized; only WAV export
/// clips (with a warning).
StegoPackage embed(const AudioCarrier& carrier, double f, double amplitude,
                   int analysis_length);

/// Runs the selected estimator over the package and reports the argmax of
/// the spectrum, restricted to f in [2/analysis_length, 0.5) to skip the
/// DC-adjacent band where a shaped carrier keeps most of its power. Exact
/// value ties resolve to the lowest frequency. Estimator failures come back
/// as a report with `error` set instead of a throw.
DetectionReport detect(const StegoPackage& pkg, const EstimatorSpec& estimator,
                       const FrequencyGrid& grid, bool keep_spectrum = false);

} // namespace specest

#endif // SPECEST_STEGANALYSIS_HPP
