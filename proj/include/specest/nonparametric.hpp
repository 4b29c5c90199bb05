#ifndef SPECEST_NONPARAMETRIC_HPP
#define SPECEST_NONPARAMETRIC_HPP

#include "specest/types.hpp"

namespace specest {

/// Triangular lag window: 1 - |k|/M for |k| <= M, else 0.
double bartlett_window(int k, int M);

/// Parzen (cubic B-spline) lag window. With u = |k|/M:
///   1 - 6u^2 + 6u^3   for u <= 1/2,
///   2 (1 - u)^3       for 1/2 < u <= 1,
///   0                 beyond.
double parzen_window(int k, int M);

/// Periodogram evaluated through the biased ACF:
///   P(f) = r(0) + 2 sum_{k=1}^{N-1} r(k) cos(2 pi f k).
/// Algebraically identical to |DFT|^2 / N at every frequency; values that
/// round just below zero (within 1e-9 of the peak) are clamped to 0.
PowerSpectrum periodogram(const RealSignal& x, const FrequencyGrid& grid);

/// Blackman-Tukey estimate
///   P(f) = w(0) r(0) + 2 sum_{k=1}^{M} w(k) r(k) cos(2 pi f k)
/// with M = window.half_width. Raises InsufficientLags when the ACF is
/// shorter than M. With a rectangular window and M = N-1 on an estimated
/// ACF this reduces to the periodogram.
PowerSpectrum blackman_tukey(const AutocorrSeq& r, const LagWindow& window,
                             const FrequencyGrid& grid);

} // namespace specest

#endif // SPECEST_NONPARAMETRIC_HPP
