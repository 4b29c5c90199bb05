#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "specest/steganalysis.hpp"

using namespace specest;

TEST_CASE("synth_carrier is a deterministic bounded surrogate") {
    const AudioCarrier a = synth_carrier(7, 1000);
    const AudioCarrier b = synth_carrier(7, 1000);
    REQUIRE(a.samples.size() == 1000);
    REQUIRE(b.samples.size() == 1000);
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i] == b.samples[i]);

    double peak = 0.0;
    for (double v : a.samples)
        peak = std::max(peak, std::abs(v));
    CHECK(peak == doctest::Approx(0.8).epsilon(1e-12));

    const AudioCarrier other = synth_carrier(8, 1000);
    bool differs = false;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        differs = differs || other.samples[i] != a.samples[i];
    CHECK(differs);

    CHECK(std::get<SyntheticOrigin>(a.origin).seed == 7);
    CHECK_THROWS_AS(synth_carrier(1, 31), std::invalid_argument);
}

TEST_CASE("synth_carrier output is strongly correlated sample to sample") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const AudioCarrier c = synth_carrier(seed, 4096);
        double r0 = 0.0, r1 = 0.0;
        for (std::size_t n = 0; n < c.samples.size(); ++n) {
            r0 += c.samples[n] * c.samples[n];
            if (n + 1 < c.samples.size())
                r1 += c.samples[n] * c.samples[n + 1];
        }
        CHECK(r1 / r0 > 0.5);
    }
}

TEST_CASE("synth_carrier output is visibly non-Gaussian") {
    // Excess kurtosis of a length-4096 Gaussian sample stays within about
    // +/-2 sqrt(24/4096) = 0.153; the shaped uniform process sits well outside.
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const AudioCarrier c = synth_carrier(seed, 4096);
        const double n = static_cast<double>(c.samples.size());
        double mean = 0.0;
        for (double v : c.samples)
            mean += v;
        mean /= n;
        double m2 = 0.0, m4 = 0.0;
        for (double v : c.samples) {
            const double d = v - mean;
            m2 += d * d;
            m4 += d * d * d * d;
        }
        m2 /= n;
        m4 /= n;
        const double excess = m4 / (m2 * m2) - 3.0;
        CHECK(std::abs(excess) > 0.15);
    }
}

TEST_CASE("embed adds the tone on top of the carrier prefix") {
    SUBCASE("zero carrier gives the pure cosine") {
        AudioCarrier zero;
        zero.samples.assign(64, 0.0);
        const StegoPackage pkg = embed(zero, 0.25, 1.0, 8);
        const double expect[8] = {1, 0, -1, 0, 1, 0, -1, 0};
        REQUIRE(pkg.stego.size() == 8);
        for (std::size_t n = 0; n < 8; ++n)
            CHECK(pkg.stego[n] == doctest::Approx(expect[n]).epsilon(1e-12));
        CHECK(pkg.analysis_length == 8);
        REQUIRE(pkg.true_frequency.has_value());
        CHECK(*pkg.true_frequency == 0.25);
    }

    SUBCASE("zero amplitude reproduces the carrier prefix") {
        const AudioCarrier c = synth_carrier(5, 256);
        const StegoPackage pkg = embed(c, 0.2, 0.0, 100);
        for (std::size_t n = 0; n < 100; ++n)
            CHECK(pkg.stego[n] == c.samples[n]);
    }

    SUBCASE("subtracting the carrier recovers the cosine") {
        const AudioCarrier c = synth_carrier(11, 1200);
        const StegoPackage pkg = embed(c, 0.2, 1.0, 1000);
        for (std::size_t n = 0; n < 1000; ++n) {
            const double tone =
                std::cos(2.0 * std::numbers::pi * 0.2 * static_cast<double>(n));
            CHECK(std::abs(pkg.stego[n] - c.samples[n] - tone) <= 1e-12);
        }
    }

    SUBCASE("preconditions") {
        const AudioCarrier c = synth_carrier(5, 64);
        CHECK_THROWS_AS(embed(c, 0.0, 1.0, 64), std::invalid_argument);
        CHECK_THROWS_AS(embed(c, 0.5, 1.0, 64), std::invalid_argument);
        CHECK_THROWS_AS(embed(c, 0.2, 1.0, 65), std::invalid_argument);
        CHECK_THROWS_AS(embed(c, 0.2, 1.0, 0), std::invalid_argument);
    }
}

TEST_CASE("detect finds a clean tone dead on") {
    AudioCarrier zero;
    zero.samples.assign(1000, 0.0);
    const StegoPackage pkg = embed(zero, 0.2, 1.0, 1000);
    const FrequencyGrid grid = FrequencyGrid::uniform();

    const EstimatorSpec specs[] = {
        {Method::Periodogram, 0, WindowKind::Bartlett},
        {Method::BlackmanTukey, 40, WindowKind::Bartlett},
        {Method::Capon, 10, WindowKind::Bartlett},
        {Method::YuleWalker, 10, WindowKind::Bartlett},
        {Method::ModCov, 4, WindowKind::Bartlett},
    };
    for (const EstimatorSpec& est : specs) {
        const DetectionReport rep = detect(pkg, est, grid);
        INFO("estimator ", est.name());
        REQUIRE(rep.error.empty());
        CHECK(std::abs(rep.estimated_frequency - 0.2) <= grid.step());
        CHECK(rep.absolute_error < 5e-4);
        CHECK(rep.estimated_frequency >= 2.0 / 1000.0);
    }
}

TEST_CASE("detect is deterministic and can keep the spectrum") {
    const AudioCarrier c = synth_carrier(7, 1000);
    const StegoPackage pkg = embed(c, 0.2, 1.0, 1000);
    const FrequencyGrid grid = FrequencyGrid::uniform();
    const EstimatorSpec est{Method::ModCov, 10, WindowKind::Bartlett};

    const DetectionReport r1 = detect(pkg, est, grid, true);
    const DetectionReport r2 = detect(pkg, est, grid, true);
    REQUIRE(r1.error.empty());
    CHECK(r1.estimated_frequency == r2.estimated_frequency);
    CHECK(r1.peak_value == r2.peak_value);
    CHECK(r1.absolute_error == r2.absolute_error);
    REQUIRE(r1.spectrum.has_value());
    REQUIRE(r2.spectrum.has_value());
    for (std::size_t i = 0; i < r1.spectrum->values.size(); ++i)
        CHECK(r1.spectrum->values[i] == r2.spectrum->values[i]);
    CHECK(r1.estimator == "modcov");
    CHECK(r1.order == 10);

    const DetectionReport slim = detect(pkg, est, grid);
    CHECK(!slim.spectrum.has_value());
}

TEST_CASE("detect reports estimator failures instead of throwing") {
    const AudioCarrier c = synth_carrier(9, 64);
    const StegoPackage pkg = embed(c, 0.2, 1.0, 64);
    // ModCov needs N >= 2p + 1; p = 40 cannot fit into 64 samples.
    const DetectionReport rep =
        detect(pkg, EstimatorSpec{Method::ModCov, 40, WindowKind::Bartlett},
               FrequencyGrid::uniform());
    CHECK(!rep.error.empty());
    CHECK(std::isnan(rep.estimated_frequency));
    CHECK(std::isnan(rep.absolute_error));
}

TEST_CASE("detect reports NaN error when the true frequency is unknown") {
    const AudioCarrier c = synth_carrier(7, 1000);
    StegoPackage pkg = embed(c, 0.2, 1.0, 1000);
    pkg.true_frequency.reset();
    const DetectionReport rep =
        detect(pkg, EstimatorSpec{Method::ModCov, 10, WindowKind::Bartlett},
               FrequencyGrid::uniform());
    REQUIRE(rep.error.empty());
    CHECK(std::isnan(rep.absolute_error));
    CHECK(std::isfinite(rep.estimated_frequency));
}
