#ifndef SPECEST_KERNELS_HPP
#define SPECEST_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

// Grid-evaluation kernels. Every spectrum here is a map over independent
// frequency points, so the hot loops parallelize over the grid with OpenMP.
// Each point is computed by the same scalar routine in a fixed inner order,
// which keeps results identical no matter how the points are scheduled.
//
// specest::kernels::reference holds plain serial twins of every kernel.
// They are the ground truth the parallel versions are tested against and
// the baseline the bench tool times.

namespace specest::kernels {

/// Biased autocorrelation: out[k] = (1/N) * sum_{n=0}^{N-1-k} x(n) x(n+k),
/// k = 0..max_lag. out must have max_lag+1 slots.
void autocorr_biased(std::span<const double> x, int max_lag, std::span<double> out);

/// Windowed cosine lag transform: out[i] = c[0] + 2 * sum_{k>=1} c[k] cos(2 pi f_i k)
/// where c[k] is the (already windowed) lag-k coefficient.
void cosine_lag_spectrum(std::span<const double> c, std::span<const double> freqs,
                         std::span<double> out);

/// All-pole spectrum: out[i] = rho / |1 + sum_k a[k-1] e^{-j 2 pi f_i k}|^2.
/// Denominators below `floor` are capped (value = rho / floor, finite-clamped)
/// and reported via capped[i] = 1.
void ar_spectrum_eval(double rho, std::span<const double> a,
                      std::span<const double> freqs, std::span<double> out,
                      std::span<unsigned char> capped, double floor_value);

/// Minimum-variance spectrum from a Cholesky factor: given lower-triangular L
/// (row-major m x m) with R = L L^T, out[i] = 1 / ||L^{-1} e(f_i)||^2 where
/// e(f) has components e^{-j 2 pi f k}, k = 0..m-1.
void capon_eval(std::span<const double> chol_lower, int m,
                std::span<const double> freqs, std::span<double> out);

namespace reference {

void autocorr_biased(std::span<const double> x, int max_lag, std::span<double> out);
void cosine_lag_spectrum(std::span<const double> c, std::span<const double> freqs,
                         std::span<double> out);
void ar_spectrum_eval(double rho, std::span<const double> a,
                      std::span<const double> freqs, std::span<double> out,
                      std::span<unsigned char> capped, double floor_value);
void capon_eval(std::span<const double> chol_lower, int m,
                std::span<const double> freqs, std::span<double> out);

} // namespace reference

} // namespace specest::kernels

#endif // SPECEST_KERNELS_HPP
