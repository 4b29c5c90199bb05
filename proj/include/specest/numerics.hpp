#ifndef SPECEST_NUMERICS_HPP
#define SPECEST_NUMERICS_HPP

#include <complex>
#include <span>
#include <vector>

#include "specest/types.hpp"

namespace specest {

/// Solves the Toeplitz normal equations
///   sum_j a(j) r(|k-j|) = -r(k),  k = 1..p
/// by the Levinson-Durbin recursion and returns the model with
/// rho = r(0) + sum_k a(k) r(k). rho is clamped to 0 when it rounds
/// slightly negative (within 1e-9 * r(0)); a larger violation, a reflection
/// coefficient of magnitude >= 1 + 1e-9 or a non-positive intermediate
/// prediction error raise SingularSystem. A clamped-to-zero rho (pure line
/// spectra) is floored at r(0) * 2^-52 so the spectrum keeps its pole shape.
ArModel levinson_durbin(const AutocorrSeq& r, int p);

/// Solves (matrix + loading * I) y = rhs for a symmetric matrix given in
/// row-major order. Cholesky under the hood; raises SingularSystem when the
/// factorization breaks down. The matrix must be symmetric to 1e-10 relative.
std::vector<double> solve_spd(std::span<const double> matrix, std::span<const double> rhs,
                              double loading = 0.0);

/// Complex sinusoid probe e(f): component m = e^{-j 2 pi f m}, m = 0..M-1.
std::vector<std::complex<double>> steering_vector(double f, int M);

/// All-pole spectrum S(f) = rho / |1 + sum_k a(k) e^{-j 2 pi f k}|^2 on the
/// grid. Grid points where the denominator underflows 1e-300 are capped and
/// listed in the result's capped_points.
PowerSpectrum ar_spectrum(const ArModel& model, const FrequencyGrid& grid);

/// Lower-triangular Cholesky factor of (matrix + loading * I), row-major.
/// Shared by solve_spd, the Capon estimator and the modified covariance fit.
/// Raises SingularSystem when a pivot is not positive.
std::vector<double> cholesky_lower(std::span<const double> matrix, int dim, double loading);

} // namespace specest

#endif // SPECEST_NUMERICS_HPP
