#include <doctest.h>

#include <cmath>
#include <vector>

#include "adsim/exact.hpp"
#include "adsim/inference.hpp"
#include "adsim/rng.hpp"

using namespace adsim;

namespace {

std::vector<double> white_noise(int n, std::uint64_t stream, double sd = 1.0) {
    GaussianRng g(RngStream{2024, stream});
    std::vector<double> x(n);
    for (double& v : x) v = sd * g.normal();
    return x;
}

// FARIMA(0, d, 0) by truncated MA(inf): psi_j = psi_{j-1} (j - 1 + d) / j.
std::vector<double> farima(int n, double d, std::uint64_t stream) {
    std::vector<double> psi(n);
    psi[0] = 1.0;
    for (int j = 1; j < n; ++j) psi[j] = psi[j - 1] * (j - 1 + d) / j;
    const std::vector<double> eps = white_noise(2 * n, stream);
    std::vector<double> x(n, 0.0);
    for (int t = 0; t < n; ++t)
        for (int j = 0; j < n; ++j) x[t] += psi[j] * eps[n + t - j];
    return x;
}

}  // namespace

TEST_SUITE_BEGIN("inference");

TEST_CASE("summaries and the welch statistic") {
    const MethodSummary s = summarize("s", {1.0, 2.0, 3.0});
    CHECK(s.mean == doctest::Approx(2.0));
    CHECK(s.sd == doctest::Approx(1.0));
    CHECK(s.n == 3);
    const MethodSummary a{"a", 1.0, 1.0, 100};
    const MethodSummary b{"b", 0.5, 2.0, 400};
    CHECK(two_sample_t(a, b) == doctest::Approx(0.5 / std::sqrt(0.02)).epsilon(1e-12));
}

TEST_CASE("yule-walker on a known sequence and on simulated ar1") {
    // r(0), r(1) of {1, -1, 1, -1} after mean removal: phi_hat = -1 + 1/n terms
    const std::vector<double> alt{1.0, -1.0, 1.0, -1.0};
    CHECK(yule_walker_ar1(alt) == doctest::Approx(-0.75));
    CHECK_THROWS_AS(yule_walker_ar1(std::vector<double>(8, 3.0)), DegenerateVariance);

    GaussianRng g(RngStream{5, 0});
    const std::vector<double> x = ar1_simulate(0.6, 1.0, 100000, g);
    CHECK(yule_walker_ar1(x) == doctest::Approx(0.6).epsilon(0.02));
}

TEST_CASE("periodogram energy location and level") {
    const int n = 256;
    // pure cosine at Fourier frequency k0 concentrates the energy there
    const int k0 = 20;
    std::vector<double> x(n);
    for (int t = 0; t < n; ++t) x[t] = std::cos(2.0 * M_PI * k0 * t / n);
    const std::vector<double> I = periodogram(x);
    REQUIRE(static_cast<int>(I.size()) == n / 2);
    for (int k = 1; k <= n / 2; ++k) {
        if (k != k0) CHECK(I[k - 1] < 1e-20 * I[k0 - 1] + 1e-12);
    }
    CHECK(I[k0 - 1] == doctest::Approx(n / (8.0 * M_PI)).epsilon(1e-10));

    // white noise: average level var/(2 pi)
    double level = 0.0;
    const int reps = 50;
    for (int r = 0; r < reps; ++r) {
        const std::vector<double> w = white_noise(n, 100 + r, 2.0);
        const std::vector<double> Iw = periodogram(w);
        for (double v : Iw) level += v;
        REQUIRE(Iw.size() == static_cast<std::size_t>(n / 2));
    }
    level /= reps * (n / 2.0);
    CHECK(level == doctest::Approx(4.0 / (2.0 * M_PI)).epsilon(0.05));
}

TEST_CASE("local whittle recovers the memory parameter") {
    const int n = 4096;
    const int m = default_lw_bandwidth(n);
    double d0 = 0.0, d2 = 0.0;
    const int reps = 5;
    for (int r = 0; r < reps; ++r) {
        d0 += local_whittle(white_noise(n, 300 + r), m).d_hat;
        d2 += local_whittle(farima(n, 0.2, 400 + r), m).d_hat;
    }
    CHECK(std::abs(d0 / reps) < 0.05);
    CHECK(d2 / reps == doctest::Approx(0.2).epsilon(0.4));
    CHECK(std::abs(d2 / reps - 0.2) < 0.08);

    // boundary flag on a deterministic trend (extreme persistence)
    std::vector<double> trend(n);
    for (int t = 0; t < n; ++t) trend[t] = t;
    CHECK(local_whittle(trend, m).at_boundary);
}

TEST_CASE("spectral goodness of fit is standard normal under the null") {
    const int n = 256, reps = 400;
    auto f_white = [](double) { return 1.0; };  // unit-variance white noise
    double s1 = 0.0, s2 = 0.0;
    for (int r = 0; r < reps; ++r) {
        const double t = spectral_gof(white_noise(n, 1000 + r), f_white);
        s1 += t;
        s2 += t * t;
    }
    const double mean = s1 / reps;
    const double sd = std::sqrt((s2 - reps * mean * mean) / (reps - 1));
    CHECK(std::abs(mean) < 0.25);
    CHECK(sd > 0.75);
    CHECK(sd < 1.25);

    // misspecified level is strongly rejected
    auto f_wrong = [](double) { return 2.0; };
    CHECK(std::abs(spectral_gof(white_noise(n, 77), f_wrong)) > 3.0);
    auto f_zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(spectral_gof(white_noise(n, 78), f_zero), ModelDensityZero);
}

TEST_CASE("kolmogorov-smirnov two-sample") {
    std::vector<double> lo(40), hi(40);
    for (int i = 0; i < 40; ++i) {
        lo[i] = i + 1;        // 1..40
        hi[i] = i + 21;       // 21..60
    }
    const KsResult hand = ks_two_sample(lo, hi);
    CHECK(hand.d == doctest::Approx(0.5));

    const KsResult same = ks_two_sample(white_noise(800, 1), white_noise(800, 2));
    CHECK(same.p > 0.01);
    std::vector<double> shifted = white_noise(800, 3);
    for (double& v : shifted) v += 1.0;
    const KsResult diff = ks_two_sample(white_noise(800, 4), shifted);
    CHECK(diff.d > 0.3);
    CHECK(diff.p < 1e-6);
}

TEST_SUITE_END();
