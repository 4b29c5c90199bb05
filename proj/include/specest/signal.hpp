#ifndef SPECEST_SIGNAL_HPP
#define SPECEST_SIGNAL_HPP

#include <cstdint>
#include <random>

#include "specest/types.hpp"

namespace specest {

/// Deterministic standard-normal sampler: mt19937_64 drives uniforms in
/// [0, 1) via (engine() >> 11) * 2^-53, turned into normals by Box-Muller.
/// Every stage is fully specified, so a given seed reproduces the same
/// stream on any conforming platform.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    double next();

    /// Uniform deviate in [0, 1).
    double uniform01();

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// x(n) = A cos(2 pi f1 n) + B cos(2 pi f2 n) + w(n) with w ~ N(0, variance),
/// n = 0..N-1, generated from sc.seed. Identical scenarios produce
/// bit-identical signals.
RealSignal synth_two_tone(const Scenario& sc);

/// Biased estimator r(k) = (1/N) sum_{n=0}^{N-1-k} x(n) x(n+k), k = 0..max_lag.
/// The divisor is N for every lag, which keeps the lag sequence
/// nonnegative-definite. Throws std::invalid_argument when max_lag is out of
/// [0, N-1].
AutocorrSeq sample_autocorrelation(const RealSignal& x, int max_lag);

/// Closed-form two-tone-plus-white ACF:
/// r(k) = A cos(2 pi f1 k) + B cos(2 pi f2 k) + [k == 0], k = 0..max_lag.
AutocorrSeq exact_two_tone_acf(const Scenario& sc, int max_lag);

} // namespace specest

#endif // SPECEST_SIGNAL_HPP
