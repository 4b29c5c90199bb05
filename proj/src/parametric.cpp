#include "specest/parametric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specest/errors.hpp"
#include "specest/kernels.hpp"
#include "specest/numerics.hpp"

namespace specest {

namespace {

constexpr int kMaxCaponOrder = 64;

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x))
            return false;
    return true;
}

} // namespace

CovarianceTable::CovarianceTable(const RealSignal& x, int p) : p_(p) {
    if (p < 1)
        throw std::invalid_argument("CovarianceTable: order must be >= 1");
    const int n = static_cast<int>(x.size());
    if (n < p + 1)
        throw DataTooShort("CovarianceTable: need at least p+1 samples");

    c_.assign(static_cast<std::size_t>(p + 1) * (p + 1), 0.0);
    const double norm = 1.0 / (2.0 * static_cast<double>(n - p));
    for (int j = 0; j <= p; ++j) {
        for (int k = j; k <= p; ++k) {
            double acc = 0.0;
            for (int t = p; t < n; ++t)
                acc += x[static_cast<std::size_t>(t - j)] * x[static_cast<std::size_t>(t - k)] +
                       x[static_cast<std::size_t>(t - p + j)] * x[static_cast<std::size_t>(t - p + k)];
            const double v = acc * norm;
            c_[static_cast<std::size_t>(j) * (p + 1) + k] = v;
            c_[static_cast<std::size_t>(k) * (p + 1) + j] = v;
        }
    }
}

PowerSpectrum capon_spectrum(const AutocorrSeq& r, int M, const FrequencyGrid& grid) {
    if (M < 1 || M > kMaxCaponOrder)
        throw std::invalid_argument("capon_spectrum: M outside [1, 64]");
    if (r.max_lag() < M - 1)
        throw InsufficientLags("capon_spectrum: need lags 0.." + std::to_string(M - 1));

    std::vector<double> toeplitz(static_cast<std::size_t>(M) * M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            toeplitz[static_cast<std::size_t>(i) * M + j] = r.at(i - j);

    std::vector<double> lower;
    try {
        lower = cholesky_lower(toeplitz, M, 0.0);
    } catch (const SingularSystem&) {
        const double loading = 1e-8 * r.at(0);
        if (!(loading > 0.0))
            throw;
        lower = cholesky_lower(toeplitz, M, loading);
    }

    PowerSpectrum ps{grid, std::vector<double>(grid.size()), {}};
    kernels::capon_eval(lower, M, grid.points(), ps.values);
    ps.info.estimator = "capon";
    ps.info.order = M;
    return ps;
}

std::pair<ArModel, PowerSpectrum> yule_walker_spectrum(const AutocorrSeq& r, int p,
                                                       const FrequencyGrid& grid) {
    ArModel model = levinson_durbin(r, p);
    PowerSpectrum ps = ar_spectrum(model, grid);
    ps.info.estimator = "yule_walker";
    return {std::move(model), std::move(ps)};
}

ArModel modcov_fit(const RealSignal& x, int p) {
    if (p < 1)
        throw std::invalid_argument("modcov_fit: order must be >= 1");
    const int n = static_cast<int>(x.size());
    if (n < 2 * p + 1)
        throw DataTooShort("modcov_fit: need N >= 2p+1, have N = " + std::to_string(n));

    const CovarianceTable table(x, p);

    std::vector<double> matrix(static_cast<std::size_t>(p) * p);
    std::vector<double> rhs(static_cast<std::size_t>(p));
    for (int j = 1; j <= p; ++j) {
        for (int k = 1; k <= p; ++k)
            matrix[static_cast<std::size_t>(j - 1) * p + (k - 1)] = table.at(j, k);
        rhs[static_cast<std::size_t>(j - 1)] = -table.at(j, 0);
    }

    const double c00 = table.at(0, 0);
    const auto rho_of = [&](const std::vector<double>& a) {
        double rho = c00;
        for (int k = 1; k <= p; ++k)
            rho += a[static_cast<std::size_t>(k - 1)] * table.at(0, k);
        return rho;
    };

    // Plain solve first; fall back to diagonal loading for degenerate
    // records (noiseless tones with p above twice the sinusoid count leave
    // the normal equations rank-deficient).
    std::vector<double> a;
    double rho = 0.0;
    bool ok = false;
    try {
        a = solve_spd(matrix, rhs, 0.0);
        rho = rho_of(a);
        ok = all_finite(a) && rho >= -1e-9 * c00;
    } catch (const SingularSystem&) {
        ok = false;
    }
    if (!ok) {
        double trace = 0.0;
        for (int j = 0; j < p; ++j)
            trace += matrix[static_cast<std::size_t>(j) * p + j];
        const double loading = 1e-8 * trace / static_cast<double>(p);
        if (!(loading > 0.0))
            throw SingularSystem("modcov_fit: normal equations are singular");
        a = solve_spd(matrix, rhs, loading);
        rho = rho_of(a);
        if (rho < -1e-9 * c00)
            throw SingularSystem("modcov_fit: negative driving variance");
    }
    if (rho < 0.0)
        rho = 0.0;
    // Exact prediction (noiseless records) leaves rho at 0; floor it the same
    // way levinson_durbin does so the fitted spectrum keeps its pole shape.
    if (rho == 0.0)
        rho = c00 * 0x1.0p-52;

    ArModel model;
    model.order = p;
    model.a = std::move(a);
    model.rho = rho;
    model.method = ArMethod::ModifiedCovariance;
    return model;
}

std::pair<ArModel, PowerSpectrum> modcov_spectrum(const RealSignal& x, int p,
                                                  const FrequencyGrid& grid) {
    ArModel model = modcov_fit(x, p);
    PowerSpectrum ps = ar_spectrum(model, grid);
    ps.info.estimator = "modcov";
    return {std::move(model), std::move(ps)};
}

} // namespace specest
