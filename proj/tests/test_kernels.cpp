#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "specest/kernels.hpp"
#include "specest/numerics.hpp"
#include "specest/signal.hpp"

using namespace specest;

namespace {

std::vector<double> grid_points(std::size_t count) {
    return FrequencyGrid::uniform(count).points();
}

} // namespace

// The parallel kernels must match their serial twins bit for bit: every grid
// point is computed by the same scalar routine, so the schedule cannot change
// the result.

TEST_CASE("autocorr kernel: parallel output is bitwise equal to the reference") {
    for (std::uint64_t seed : {3, 14, 159}) {
        const std::vector<double> x = oracles::random_signal(seed, 257);
        const int max_lag = 64;
        std::vector<double> par(max_lag + 1), ser(max_lag + 1);
        kernels::autocorr_biased(x, max_lag, par);
        kernels::reference::autocorr_biased(x, max_lag, ser);
        for (int k = 0; k <= max_lag; ++k)
            CHECK(par[static_cast<std::size_t>(k)] == ser[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("cosine lag kernel: parallel output is bitwise equal to the reference") {
    const std::vector<double> c = oracles::random_signal(8, 33, 0.1);
    for (std::size_t g : {7u, 128u, 1024u}) {
        const std::vector<double> freqs = grid_points(g);
        std::vector<double> par(g), ser(g);
        kernels::cosine_lag_spectrum(c, freqs, par);
        kernels::reference::cosine_lag_spectrum(c, freqs, ser);
        for (std::size_t i = 0; i < g; ++i)
            CHECK(par[i] == ser[i]);
    }
}

TEST_CASE("ar kernel: parallel output and cap flags match the reference") {
    const std::vector<double> a = {-1.4, 0.9, -0.3, 0.1};
    const std::vector<double> freqs = grid_points(513);
    std::vector<double> par(513), ser(513);
    std::vector<unsigned char> cap_par(513, 0), cap_ser(513, 0);
    kernels::ar_spectrum_eval(0.7, a, freqs, par, cap_par, 1e-300);
    kernels::reference::ar_spectrum_eval(0.7, a, freqs, ser, cap_ser, 1e-300);
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        CHECK(par[i] == ser[i]);
        CHECK(cap_par[i] == cap_ser[i]);
    }

    // Degenerate pole at f = 0 trips the cap in both variants.
    const std::vector<double> unit = {-1.0};
    kernels::ar_spectrum_eval(1.0, unit, freqs, par, cap_par, 1e-300);
    kernels::reference::ar_spectrum_eval(1.0, unit, freqs, ser, cap_ser, 1e-300);
    CHECK(cap_par[0] == 1);
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        CHECK(par[i] == ser[i]);
        CHECK(cap_par[i] == cap_ser[i]);
    }
}

TEST_CASE("capon kernel: parallel output is bitwise equal to the reference") {
    const std::vector<double> x = oracles::random_signal(21, 400);
    const AutocorrSeq r = sample_autocorrelation(RealSignal(x), 11);
    const int m = 12;
    std::vector<double> lags(r.values().begin(), r.values().end());
    const std::vector<double> chol = cholesky_lower(oracles::toeplitz(lags, m), m, 0.0);

    const std::vector<double> freqs = grid_points(1024);
    std::vector<double> par(1024), ser(1024);
    kernels::capon_eval(chol, m, freqs, par);
    kernels::reference::capon_eval(chol, m, freqs, ser);
    for (std::size_t i = 0; i < freqs.size(); ++i)
        CHECK(par[i] == ser[i]);
}

TEST_CASE("capon kernel enforces its stack-order bound") {
    const std::vector<double> freqs = grid_points(4);
    std::vector<double> out(4);

    // 64 is the largest accepted order; white ACF makes the factor trivial.
    std::vector<double> eye(64 * 64, 0.0);
    for (int i = 0; i < 64; ++i)
        eye[static_cast<std::size_t>(i) * 64 + i] = 1.0;
    CHECK_NOTHROW(kernels::capon_eval(eye, 64, freqs, out));
    for (double v : out)
        CHECK(v == doctest::Approx(1.0 / 64.0).epsilon(1e-12));

    std::vector<double> big(65 * 65, 0.0);
    for (int i = 0; i < 65; ++i)
        big[static_cast<std::size_t>(i) * 65 + i] = 1.0;
    CHECK_THROWS_AS(kernels::capon_eval(big, 65, freqs, out), std::invalid_argument);
    CHECK_THROWS_AS(kernels::capon_eval(eye, 0, freqs, out), std::invalid_argument);
}

TEST_CASE("autocorr kernel agrees with the brute-force definition") {
    const std::vector<double> x = oracles::random_signal(99, 50);
    std::vector<double> out(11);
    kernels::autocorr_biased(x, 10, out);
    for (int k = 0; k <= 10; ++k) {
        double acc = 0.0;
        for (int n = 0; n + k < 50; ++n)
            acc += x[static_cast<std::size_t>(n)] * x[static_cast<std::size_t>(n + k)];
        CHECK(out[static_cast<std::size_t>(k)] == doctest::Approx(acc / 50.0).epsilon(1e-12));
    }
}
