#ifndef SPECEST_PARAMETRIC_HPP
#define SPECEST_PARAMETRIC_HPP

#include <utility>
#include <vector>

#include "specest/types.hpp"

namespace specest {

/// Symmetric table c(j,k), 0 <= j,k <= p, of forward-backward covariance
/// sums used by the modified covariance fit.
class CovarianceTable {
public:
    /// c(j,k) = 1/(2(N-p)) * sum_{n=p}^{N-1} [x(n-j)x(n-k) + x(n-p+j)x(n-p+k)].
    CovarianceTable(const RealSignal& x, int p);

    double at(int j, int k) const { return c_[static_cast<std::size_t>(j) * (p_ + 1) + k]; }
    int order() const noexcept { return p_; }

private:
    int p_;
    std::vector<double> c_; // (p+1) x (p+1), row-major
};

/// Minimum-variance spectrum S(f) = 1 / (e^H R^{-1} e) with R the M x M
/// symmetric Toeplitz matrix built from r(0..M-1) and e the length-M
/// steering vector. When the plain Cholesky factorization of R fails,
/// diagonal loading 1e-8 * trace(R) / M is applied once; failure after that
/// raises SingularSystem. Raises InsufficientLags when r is too short.
PowerSpectrum capon_spectrum(const AutocorrSeq& r, int M, const FrequencyGrid& grid);

/// Fits an AR(p) model by Levinson-Durbin on r and evaluates its spectrum.
std::pair<ArModel, PowerSpectrum> yule_walker_spectrum(const AutocorrSeq& r, int p,
                                                       const FrequencyGrid& grid);

/// Forward-backward least-squares AR(p) fit: solves
///   sum_k a(k) c(j,k) = -c(j,0),  j = 1..p,
/// then rho = c(0,0) + sum_k a(k) c(0,k) (clamped at 0 within rounding; an
/// exactly-zero residual is floored at c(0,0) * 2^-52 so noiseless fits keep
/// a usable spectrum shape). Falls back to diagonal loading when the normal
/// equations are singular (degenerate records such as a noiseless tone with
/// p above twice the tone count). Raises DataTooShort when N < 2p + 1.
ArModel modcov_fit(const RealSignal& x, int p);

/// modcov_fit followed by spectrum evaluation.
std::pair<ArModel, PowerSpectrum> modcov_spectrum(const RealSignal& x, int p,
                                                  const FrequencyGrid& grid);

} // namespace specest

#endif // SPECEST_PARAMETRIC_HPP
