#include <doctest.h>

#include <cmath>
#include <complex>

#include "adsim/wavelets.hpp"

using namespace adsim;

TEST_SUITE_BEGIN("wavelets");

TEST_CASE("cmf coefficient identities") {
    for (int N : {1, 2, 4, 8}) {
        const CmfPair cmf = daubechies_cmf(N);
        CHECK(cmf.h.size() == static_cast<std::size_t>(2 * N));
        double sh = 0.0, sg = 0.0;
        for (double v : cmf.h) sh += v;
        for (double v : cmf.g) sg += v;
        CHECK(sh == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
        CHECK(std::abs(sg) < 5e-12);
        // quadrature mirror identity |uhat(x)|^2 + |uhat(x+pi)|^2 = 2
        for (double x : {0.0, 0.4, 1.1, 2.0, 3.0}) {
            const double a = std::norm(cmf_transfer(cmf.h, x));
            const double b = std::norm(cmf_transfer(cmf.h, x + M_PI));
            CHECK(a + b == doctest::Approx(2.0).epsilon(1e-10));
            // high-pass shares the identity and is orthogonal to the low-pass
            const std::complex<double> cross =
                cmf_transfer(cmf.h, x) * std::conj(cmf_transfer(cmf.g, x)) +
                cmf_transfer(cmf.h, x + M_PI) * std::conj(cmf_transfer(cmf.g, x + M_PI));
            CHECK(std::abs(cross) < 1e-10);
        }
        // N vanishing moments: vhat has an N-th order zero at 0, uhat at pi
        CHECK(std::abs(cmf_transfer(cmf.g, 0.0)) < 1e-10);
        CHECK(std::abs(cmf_transfer(cmf.h, M_PI)) < 1e-10);
    }
    CHECK_THROWS_AS(daubechies_cmf(3), UnsupportedOrder);
}

TEST_CASE("frequency folding") {
    CHECK(fold_2pi(0.3) == doctest::Approx(0.3));
    CHECK(fold_2pi(2.0 * M_PI + 0.3) == doctest::Approx(0.3));
    CHECK(fold_2pi(M_PI) == doctest::Approx(-M_PI));
    CHECK(fold_2pi(-M_PI) == doctest::Approx(-M_PI));
    CHECK(fold_2pi(3.0 * M_PI / 2.0) == doctest::Approx(-M_PI / 2.0));
}

TEST_CASE("truncated filter matches the continuous filter under rescaling") {
    for (const ProcessModel& m :
         {ProcessModel::ou(1.0, 1.0), ProcessModel::fou(1.0, 1.0, 0.25),
          ProcessModel::fou(0.5, 2.0, -0.3), ProcessModel::fgle(2.0, 1.0, 0.25)}) {
        for (int j : {0, 2, 5}) {
            const DiscretizationFilter gj =
                make_discretization_filter(m, j, Smoothing::Truncated);
            for (double x : {0.2, 1.0, 2.5}) {
                // for |2^{-j} x| <= pi the truncated filter is exact
                CHECK(gj(std::ldexp(x, -j)) ==
                      doctest::Approx(eval_ghat(m, x)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("smoothed filter converges and relocates its minimum to pi") {
    const ProcessModel m = ProcessModel::ou(1.0, 1.0);
    for (double x : {0.3, 1.0, 2.0}) {
        const DiscretizationFilter g10 = make_discretization_filter(m, 10, Smoothing::Smoothed);
        CHECK(g10(std::ldexp(x, -10)) == doctest::Approx(eval_ghat(m, x)).epsilon(1e-4));
    }
    // relocated minimum at pi within grid resolution
    const DiscretizationFilter g2 = make_discretization_filter(m, 2, Smoothing::Smoothed);
    const double at_pi = g2(M_PI - 1e-9);
    for (double x = 2.0; x < M_PI - 1e-3; x += 0.05) CHECK(g2(x) > at_pi);

    // constraint x*(j) real is validated
    CHECK_THROWS_AS(make_discretization_filter(ProcessModel::ou(10.0, 1.0), 0,
                                               Smoothing::Smoothed),
                    ParameterOutOfRange);
    CHECK(smoothing_xstar(1.0, 1.0, 8) == doctest::Approx(M_PI).epsilon(1e-4));
}

TEST_CASE("ratio diagnostics") {
    const ProcessModel ou = ProcessModel::ou(1.0, 1.0);
    const ProcessModel fou = ProcessModel::fou(1.0, 1.0, 0.25);
    const ProcessModel fgle = ProcessModel::fgle(2.0, 1.0, 0.25);
    for (double x : {0.0, 0.5, 2.0, 3.0}) {
        CHECK(eval_Gj(ou, 3, x, GjVariant::Zeta) == doctest::Approx(1.0));
        CHECK(eval_Gj(fou, 3, x, GjVariant::Power) == doctest::Approx(1.0));
    }
    // beyond pi the folded argument differs
    CHECK(eval_Gj(ou, 3, 3.5, GjVariant::Zeta) > 1.0);
    CHECK(eval_Gj(fgle, 2, 1.0, GjVariant::GammaD) == doctest::Approx(1.0));
    CHECK_THROWS_AS(eval_Gj(ou, 3, 5.0, GjVariant::Zeta), ParameterOutOfRange);
    CHECK_THROWS_AS(eval_Gj(ou, 3, 1.0, GjVariant::GammaD), ParameterOutOfRange);

    // exact-OU ratio at zero tends to one from above
    const double g5 = eval_Gj(ou, 5, 0.0, GjVariant::ExactOu);
    const double g8 = eval_Gj(ou, 8, 0.0, GjVariant::ExactOu);
    CHECK(g5 > 1.0);
    CHECK(g8 > 1.0);
    CHECK(g8 - 1.0 < g5 - 1.0);
    // |G_j(0) - 1| * 2^j approaches zeta / 2
    CHECK(assumption5_diagnostic(ou, GjVariant::ExactOu, 2, 12) ==
          doctest::Approx(0.5).epsilon(0.1));
    CHECK(assumption5_diagnostic(ou, GjVariant::Zeta, 2, 12) == doctest::Approx(0.0));
}

TEST_CASE("stub filter build recovers the cmf coefficients") {
    const CmfPair cmf = daubechies_cmf(2);
    QuadratureConfig cfg;
    TruncationPolicy policy{6, 0.0};
    auto one = [](double) { return 1.0; };
    const ScaleFilters sf = build_scale_filters_from_spectra(one, one, 0, cmf, cfg, policy);
    const int T = sf.trunc_lag;
    for (int k = -T; k <= T; ++k) {
        const double expect_u =
            (k >= 0 && k < static_cast<int>(cmf.h.size())) ? cmf.h[k] : 0.0;
        const double expect_v =
            (k >= 0 && k < static_cast<int>(cmf.g.size())) ? cmf.g[k] : 0.0;
        CHECK(sf.u[T + k] == doctest::Approx(expect_u).epsilon(1e-10));
        CHECK(sf.v[T + k] == doctest::Approx(expect_v).epsilon(1e-10));
    }
}

TEST_CASE("ou scale filters: smoothing speeds up tail decay") {
    const ProcessModel m = ProcessModel::ou(1.0, 1.0);
    const CmfPair cmf = daubechies_cmf(4);
    QuadratureConfig cfg;
    TruncationPolicy policy{40, 0.0};
    const ScaleFilters trunc =
        build_scale_filters(m, 1, cmf, Smoothing::Truncated, cfg, policy);
    const ScaleFilters smooth =
        build_scale_filters(m, 1, cmf, Smoothing::Smoothed, cfg, policy);
    auto tail_max = [](const ScaleFilters& sf) {
        double worst = 0.0;
        for (int k = 31; k <= 40; ++k) {
            worst = std::max(worst, std::abs(sf.u[sf.trunc_lag + k]));
            worst = std::max(worst, std::abs(sf.u[sf.trunc_lag - k]));
            worst = std::max(worst, std::abs(sf.v[sf.trunc_lag + k]));
            worst = std::max(worst, std::abs(sf.v[sf.trunc_lag - k]));
        }
        return worst;
    };
    CHECK(tail_max(smooth) <= tail_max(trunc));
    CHECK(tail_max(smooth) < 5e-6);
}

TEST_CASE("fou filter tails are small at the truncation lag") {
    const ProcessModel m = ProcessModel::fou(1.0, 1.0, 0.25);
    const CmfPair cmf = daubechies_cmf(4);
    QuadratureConfig cfg;
    cfg.rho = default_rho(0.25);
    TruncationPolicy policy{40, 0.0};
    const ScaleFilters sf = build_scale_filters(m, 2, cmf, Smoothing::Smoothed, cfg, policy);
    double worst = 0.0;
    for (int k = 31; k <= 40; ++k) {
        worst = std::max(worst, std::abs(sf.u[sf.trunc_lag + k]));
        worst = std::max(worst, std::abs(sf.u[sf.trunc_lag - k]));
        worst = std::max(worst, std::abs(sf.v[sf.trunc_lag + k]));
        worst = std::max(worst, std::abs(sf.v[sf.trunc_lag - k]));
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("g0 filter is symmetric and summable") {
    const ProcessModel m = ProcessModel::fou(1.0, 1.0, 0.25);
    const CmfPair cmf = daubechies_cmf(4);
    QuadratureConfig cfg;
    cfg.rho = default_rho(0.25);
    const std::vector<double> g0 = g0_time_filter(m, cmf, Smoothing::Smoothed, 30, cfg);
    CHECK(g0.size() == 61);
    for (int k = 1; k <= 30; ++k) CHECK(g0[30 + k] == doctest::Approx(g0[30 - k]));
    CHECK(std::abs(g0[0]) < std::abs(g0[30]));
}

TEST_SUITE_END();
