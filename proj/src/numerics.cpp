#include "specest/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "specest/errors.hpp"
#include "specest/kernels.hpp"

namespace specest {

ArModel levinson_durbin(const AutocorrSeq& r, int p) {
    if (p < 1)
        throw std::invalid_argument("levinson_durbin: order must be >= 1");
    if (r.max_lag() < p)
        throw InsufficientLags("levinson_durbin: need r(0.." + std::to_string(p) +
                               "), have max lag " + std::to_string(r.max_lag()));
    const double r0 = r.at(0);
    if (!(r0 > 0.0))
        throw SingularSystem("levinson_durbin: r(0) must be positive");

    std::vector<double> a(static_cast<std::size_t>(p), 0.0);
    std::vector<double> prev(a);
    double err = r0;

    for (int m = 1; m <= p; ++m) {
        double acc = r.at(m);
        for (int j = 1; j < m; ++j)
            acc += prev[static_cast<std::size_t>(j - 1)] * r.at(m - j);
        const double k = -acc / err;
        if (std::abs(k) >= 1.0 + 1e-9)
            throw SingularSystem("levinson_durbin: reflection coefficient magnitude " +
                                 std::to_string(std::abs(k)));
        a[static_cast<std::size_t>(m - 1)] = k;
        for (int j = 1; j < m; ++j)
            a[static_cast<std::size_t>(j - 1)] =
                prev[static_cast<std::size_t>(j - 1)] + k * prev[static_cast<std::size_t>(m - j - 1)];
        err *= 1.0 - k * k;
        // err is the next divisor; it only has to stay positive while more
        // stages remain. A final-stage zero (pure line spectra) is legal and
        // shows up as rho = 0 below.
        if (m < p && !(err > 0.0))
            throw SingularSystem("levinson_durbin: prediction error vanished at stage " +
                                 std::to_string(m));
        prev = a;
    }

    double rho = r0;
    for (int k = 1; k <= p; ++k)
        rho += a[static_cast<std::size_t>(k - 1)] * r.at(k);
    if (rho < 0.0) {
        if (rho < -1e-9 * r0)
            throw SingularSystem("levinson_durbin: negative driving variance");
        rho = 0.0;
    }
    // Pure line spectra (noiseless sinusoid ACFs) predict exactly and leave
    // rho at 0, which would zero out S = rho/|A|^2 everywhere and erase the
    // pole structure. A relative epsilon keeps the spectrum's shape while
    // staying scale-equivariant.
    if (rho == 0.0)
        rho = r0 * 0x1.0p-52;

    ArModel model;
    model.order = p;
    model.a = std::move(a);
    model.rho = rho;
    model.method = ArMethod::YuleWalker;
    return model;
}

std::vector<double> cholesky_lower(std::span<const double> matrix, int dim, double loading) {
    if (dim < 1)
        throw std::invalid_argument("cholesky_lower: dimension must be >= 1");
    if (matrix.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("cholesky_lower: matrix size mismatch");

    std::vector<double> lower(matrix.size(), 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            double acc = matrix[static_cast<std::size_t>(i) * dim + j];
            if (i == j)
                acc += loading;
            for (int k = 0; k < j; ++k)
                acc -= lower[static_cast<std::size_t>(i) * dim + k] *
                       lower[static_cast<std::size_t>(j) * dim + k];
            if (i == j) {
                if (!(acc > 0.0))
                    throw SingularSystem("cholesky_lower: non-positive pivot at row " +
                                         std::to_string(i));
                lower[static_cast<std::size_t>(i) * dim + j] = std::sqrt(acc);
            } else {
                lower[static_cast<std::size_t>(i) * dim + j] =
                    acc / lower[static_cast<std::size_t>(j) * dim + j];
            }
        }
    }
    return lower;
}

std::vector<double> solve_spd(std::span<const double> matrix, std::span<const double> rhs,
                              double loading) {
    const int n = static_cast<int>(rhs.size());
    if (n < 1)
        throw std::invalid_argument("solve_spd: empty system");
    if (matrix.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("solve_spd: matrix size mismatch");
    if (loading < 0.0)
        throw std::invalid_argument("solve_spd: negative loading");

    double scale = 0.0;
    for (double v : matrix)
        scale = std::max(scale, std::abs(v));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            const double d = std::abs(matrix[static_cast<std::size_t>(i) * n + j] -
                                      matrix[static_cast<std::size_t>(j) * n + i]);
            if (d > 1e-10 * scale)
                throw std::invalid_argument("solve_spd: matrix is not symmetric");
        }

    const std::vector<double> lower = cholesky_lower(matrix, n, loading);

    // L z = rhs, then L^T y = z.
    std::vector<double> y(rhs.begin(), rhs.end());
    for (int i = 0; i < n; ++i) {
        double acc = y[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            acc -= lower[static_cast<std::size_t>(i) * n + j] * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc / lower[static_cast<std::size_t>(i) * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double acc = y[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            acc -= lower[static_cast<std::size_t>(j) * n + i] * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = acc / lower[static_cast<std::size_t>(i) * n + i];
    }
    return y;
}

std::vector<std::complex<double>> steering_vector(double f, int M) {
    if (M < 1)
        throw std::invalid_argument("steering_vector: M must be >= 1");
    if (!(f >= 0.0 && f <= 0.5))
        throw std::invalid_argument("steering_vector: frequency outside [0, 0.5]");
    std::vector<std::complex<double>> e(static_cast<std::size_t>(M));
    const double w = 2.0 * std::numbers::pi * f;
    for (int m = 0; m < M; ++m) {
        const double phase = w * static_cast<double>(m);
        e[static_cast<std::size_t>(m)] = std::complex<double>(std::cos(phase), -std::sin(phase));
    }
    return e;
}

PowerSpectrum ar_spectrum(const ArModel& model, const FrequencyGrid& grid) {
    if (!(model.rho >= 0.0))
        throw std::invalid_argument("ar_spectrum: rho must be >= 0");
    if (model.a.size() != static_cast<std::size_t>(model.order))
        throw std::invalid_argument("ar_spectrum: coefficient count != order");

    PowerSpectrum ps{grid, std::vector<double>(grid.size()), {}};
    std::vector<unsigned char> capped(grid.size(), 0);
    kernels::ar_spectrum_eval(model.rho, model.a, grid.points(), ps.values, capped, 1e-300);
    ps.info.estimator = "ar";
    ps.info.order = model.order;
    for (std::size_t i = 0; i < capped.size(); ++i)
        if (capped[i])
            ps.info.capped_points.push_back(i);
    return ps;
}

} // namespace specest
