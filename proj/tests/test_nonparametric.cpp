#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "specest/errors.hpp"
#include "specest/nonparametric.hpp"
#include "specest/signal.hpp"

using namespace specest;

namespace {

Scenario case_a1(std::uint64_t seed) {
    Scenario sc;
    sc.name = "a1";
    sc.kind = ScenarioKind::TwoToneAwgn;
    sc.a = 1.0;
    sc.b = 1.0;
    sc.f1 = 0.2;
    sc.f2 = 0.25;
    sc.order = 5;
    sc.n = 128;
    sc.noise_variance = 1e-3;
    sc.seed = seed;
    return sc;
}

} // namespace

TEST_CASE("window helper functions match the formulas") {
    CHECK(bartlett_window(0, 5) == 1.0);
    CHECK(bartlett_window(5, 5) == 0.0);
    CHECK(bartlett_window(2, 5) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(bartlett_window(-2, 5) == bartlett_window(2, 5));
    CHECK(bartlett_window(6, 5) == 0.0);

    CHECK(parzen_window(0, 8) == 1.0);
    CHECK(parzen_window(8, 8) == 0.0);
    CHECK(parzen_window(4, 8) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(parzen_window(-3, 8) == parzen_window(3, 8));
    CHECK(parzen_window(9, 8) == 0.0);

    CHECK_THROWS_AS(bartlett_window(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(parzen_window(1, 0), std::invalid_argument);
}

TEST_CASE("periodogram equals |DFT|^2 / N") {
    SUBCASE("zero signal gives the zero spectrum") {
        const PowerSpectrum s =
            periodogram(RealSignal(std::vector<double>(16, 0.0)), FrequencyGrid::uniform(64));
        for (double v : s.values)
            CHECK(v == 0.0);
        CHECK(s.info.estimator == "periodogram");
    }

    SUBCASE("pure quarter-band tone peaks where the direct DFT peaks") {
        std::vector<double> x(128);
        for (int n = 0; n < 128; ++n)
            x[static_cast<std::size_t>(n)] =
                std::cos(2.0 * std::numbers::pi * 0.25 * static_cast<double>(n));
        const FrequencyGrid grid = FrequencyGrid::uniform();
        const PowerSpectrum s = periodogram(RealSignal(x), grid);

        std::size_t best = 0, oracle_best = 0;
        double oracle_val = -1.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (s.values[i] > s.values[best])
                best = i;
            const double o = oracles::dft_power(x, grid[i]);
            if (o > oracle_val) {
                oracle_val = o;
                oracle_best = i;
            }
        }
        CHECK(best == oracle_best);
        // 0.25 falls midway between two grid points, so the argmax can sit at
        // most one step away from the true tone.
        CHECK(std::abs(grid[best] - 0.25) <= grid.step());
    }

    SUBCASE("two-tone noisy case matches the identity at every grid point") {
        const RealSignal x = synth_two_tone(case_a1(42));
        const FrequencyGrid grid = FrequencyGrid::uniform();
        const PowerSpectrum s = periodogram(x, grid);
        double peak = 0.0;
        for (double v : s.values)
            peak = std::max(peak, v);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double o = oracles::dft_power(x.samples(), grid[i]);
            CHECK(std::abs(s.values[i] - o) <= 1e-10 * std::max(o, 1e-12 * peak));
        }
    }

    SUBCASE("identity holds across random signals") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const int n = 16 + static_cast<int>(seed * 13 % 200);
            const std::vector<double> x = oracles::random_signal(seed, n);
            const FrequencyGrid grid = FrequencyGrid::uniform(97);
            const PowerSpectrum s = periodogram(RealSignal(x), grid);
            double peak = 0.0;
            for (double v : s.values)
                peak = std::max(peak, v);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double o = oracles::dft_power(x, grid[i]);
                CHECK(std::abs(s.values[i] - o) <= 1e-10 * std::max(o, 1e-12 * peak));
            }
        }
    }

    SUBCASE("values are never negative") {
        for (std::uint64_t seed : {5, 6, 7}) {
            const std::vector<double> x = oracles::random_signal(seed, 100);
            const PowerSpectrum s = periodogram(RealSignal(x), FrequencyGrid::uniform());
            for (double v : s.values)
                CHECK(v >= 0.0);
        }
    }

    SUBCASE("single-sample records are rejected") {
        CHECK_THROWS_AS(periodogram(RealSignal({1.0}), FrequencyGrid::uniform(8)),
                        std::invalid_argument);
    }

    SUBCASE("mean over the inclusive grid approximates the time-domain power") {
        const std::vector<double> x = oracles::random_signal(4242, 128);
        const FrequencyGrid grid = FrequencyGrid::uniform();
        const PowerSpectrum s = periodogram(RealSignal(x), grid);
        double grid_mean = 0.0;
        for (double v : s.values)
            grid_mean += v;
        grid_mean /= static_cast<double>(s.values.size());
        double power = 0.0;
        for (double v : x)
            power += v * v;
        power /= static_cast<double>(x.size());
        CHECK(std::abs(grid_mean - power) <= 0.02 * power);
    }
}

TEST_CASE("blackman_tukey applies the lag window") {
    SUBCASE("rectangular window at full width reproduces the periodogram") {
        const std::vector<double> xv = oracles::random_signal(11, 64);
        const RealSignal x(xv);
        const FrequencyGrid grid = FrequencyGrid::uniform(257);
        const PowerSpectrum per = periodogram(x, grid);
        const AutocorrSeq r = sample_autocorrelation(x, 63);
        const PowerSpectrum bt = blackman_tukey(r, LagWindow{WindowKind::Rectangular, 63}, grid);
        double peak = 0.0;
        for (double v : per.values)
            peak = std::max(peak, v);
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(std::abs(bt.values[i] - per.values[i]) <= 1e-10 * std::max(per.values[i], 1e-12 * peak));
    }

    SUBCASE("white exact ACF is flat under any window") {
        const AutocorrSeq r({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, AcfSource::Exact);
        for (WindowKind kind : {WindowKind::Rectangular, WindowKind::Bartlett, WindowKind::Parzen}) {
            const PowerSpectrum s =
                blackman_tukey(r, LagWindow{kind, 5}, FrequencyGrid::uniform(33));
            for (double v : s.values)
                CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("matches a direct windowed-sum evaluation") {
        const std::vector<double> xv = oracles::random_signal(31, 80);
        const AutocorrSeq r = sample_autocorrelation(RealSignal(xv), 12);
        const FrequencyGrid grid = FrequencyGrid::uniform(129);
        const LagWindow w{WindowKind::Parzen, 12};
        const PowerSpectrum s = blackman_tukey(r, w, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double ref = r.at(0);
            for (int k = 1; k <= 12; ++k)
                ref += 2.0 * w.value(k) * r.at(k) *
                       std::cos(2.0 * std::numbers::pi * grid[i] * static_cast<double>(k));
            CHECK(s.values[i] == doctest::Approx(ref).epsilon(1e-12));
        }
        CHECK(s.info.window == "parzen");
        CHECK(s.info.order == 12);
    }

    SUBCASE("Bartlett and Parzen windows keep estimated spectra nonnegative") {
        for (std::uint64_t seed : {41, 42, 43}) {
            const std::vector<double> xv = oracles::random_signal(seed, 96);
            const AutocorrSeq r = sample_autocorrelation(RealSignal(xv), 24);
            for (WindowKind kind : {WindowKind::Bartlett, WindowKind::Parzen}) {
                const PowerSpectrum s =
                    blackman_tukey(r, LagWindow{kind, 24}, FrequencyGrid::uniform());
                double hi = 0.0;
                for (double v : s.values)
                    hi = std::max(hi, v);
                for (double v : s.values)
                    CHECK(v >= -1e-9 * hi);
            }
        }
    }

    SUBCASE("short ACFs are rejected") {
        const AutocorrSeq r({1.0, 0.5, 0.2}, AcfSource::Estimated);
        CHECK_THROWS_AS(blackman_tukey(r, LagWindow{WindowKind::Bartlett, 3},
                                       FrequencyGrid::uniform(8)),
                        InsufficientLags);
        CHECK_THROWS_AS(blackman_tukey(r, LagWindow{WindowKind::Bartlett, 0},
                                       FrequencyGrid::uniform(8)),
                        std::invalid_argument);
    }
}
