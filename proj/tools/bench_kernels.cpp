// Times the OpenMP grid kernels against their serial reference twins and
// verifies bitwise agreement on the way. Usage: bench_kernels [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "specest/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F> double best_ms(F&& body, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        body();
        const auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool bits_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct Row {
    std::string kernel;
    std::string size;
    double serial_ms = 0.0;
    double parallel_ms = 0.0;
    bool match = false;
};

void print_table(const std::vector<Row>& rows) {
    std::printf("%-20s %-22s %10s %12s %9s %8s\n", "kernel", "size", "serial_ms",
                "parallel_ms", "speedup", "bitwise");
    for (const Row& r : rows)
        std::printf("%-20s %-22s %10.2f %12.2f %8.2fx %8s\n", r.kernel.c_str(),
                    r.size.c_str(), r.serial_ms, r.parallel_ms,
                    r.parallel_ms > 0.0 ? r.serial_ms / r.parallel_ms : 0.0,
                    r.match ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    if (reps < 1) {
        std::fprintf(stderr, "usage: bench_kernels [reps >= 1]\n");
        return 1;
    }

    std::mt19937_64 eng(12345);
    std::normal_distribution<double> dist(0.0, 1.0);
    const auto noise = [&](std::size_t n) {
        std::vector<double> v(n);
        for (double& x : v)
            x = dist(eng);
        return v;
    };

    const std::size_t grid_n = 8192;
    std::vector<double> freqs(grid_n);
    for (std::size_t i = 0; i < grid_n; ++i)
        freqs[i] = 0.5 * static_cast<double>(i) / static_cast<double>(grid_n - 1);

    std::vector<Row> rows;
    namespace k = specest::kernels;

    {
        const std::size_t n = 16384;
        const int lags = 1024;
        const std::vector<double> x = noise(n);
        std::vector<double> ref(lags + 1), par(lags + 1);
        Row row{"autocorr_biased", "N=16384 lags=1024", 0, 0, false};
        row.serial_ms = best_ms([&] { k::reference::autocorr_biased(x, lags, ref); }, reps);
        row.parallel_ms = best_ms([&] { k::autocorr_biased(x, lags, par); }, reps);
        row.match = bits_equal(ref, par);
        rows.push_back(row);
    }

    {
        const std::vector<double> c = noise(512);
        std::vector<double> ref(grid_n), par(grid_n);
        Row row{"cosine_lag_spectrum", "lags=512 grid=8192", 0, 0, false};
        row.serial_ms =
            best_ms([&] { k::reference::cosine_lag_spectrum(c, freqs, ref); }, reps);
        row.parallel_ms = best_ms([&] { k::cosine_lag_spectrum(c, freqs, par); }, reps);
        row.match = bits_equal(ref, par);
        rows.push_back(row);
    }

    {
        std::vector<double> a(32);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = 0.5 / static_cast<double>((i + 1) * (i + 1));
        std::vector<double> ref(grid_n), par(grid_n);
        std::vector<unsigned char> capped_ref(grid_n), capped_par(grid_n);
        Row row{"ar_spectrum_eval", "p=32 grid=8192", 0, 0, false};
        row.serial_ms = best_ms(
            [&] { k::reference::ar_spectrum_eval(1.0, a, freqs, ref, capped_ref, 1e-300); },
            reps);
        row.parallel_ms = best_ms(
            [&] { k::ar_spectrum_eval(1.0, a, freqs, par, capped_par, 1e-300); }, reps);
        row.match = bits_equal(ref, par) && capped_ref == capped_par;
        rows.push_back(row);
    }

    {
        const int m = 48;
        std::vector<double> chol(static_cast<std::size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < i; ++j)
                chol[static_cast<std::size_t>(i) * m + j] = 0.002 * dist(eng);
            chol[static_cast<std::size_t>(i) * m + i] = 1.0 + 0.01 * i;
        }
        std::vector<double> ref(grid_n), par(grid_n);
        Row row{"capon_eval", "M=48 grid=8192", 0, 0, false};
        row.serial_ms =
            best_ms([&] { k::reference::capon_eval(chol, m, freqs, ref); }, reps);
        row.parallel_ms = best_ms([&] { k::capon_eval(chol, m, freqs, par); }, reps);
        row.match = bits_equal(ref, par);
        rows.push_back(row);
    }

    print_table(rows);

    bool all_match = true;
    for (const Row& r : rows)
        all_match = all_match && r.match;
    if (!all_match) {
        std::fprintf(stderr, "bitwise mismatch between parallel and reference kernels\n");
        return 1;
    }
    return 0;
}
