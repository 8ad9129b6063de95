#include <doctest.h>

#include <cmath>
#include <complex>

#include "adsim/models.hpp"
#include "adsim/quadrature.hpp"

using namespace adsim;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("polynomial and oscillatory integrals") {
    QuadratureConfig cfg;
    auto cubic = [](double x) { return x * x * x - 2.0 * x + 1.0; };
    CHECK(integrate(cubic, -1.0, 2.0, cfg).value == doctest::Approx(3.75).epsilon(1e-12));
    auto osc = [](double x) { return std::cos(40.0 * x); };
    CHECK(integrate(osc, 0.0, M_PI, cfg).value == doctest::Approx(0.0).epsilon(1e-10));

    QuadratureConfig gk = cfg;
    gk.method = QuadMethod::GaussKronrod;
    CHECK(integrate(cubic, -1.0, 2.0, gk).value == doctest::Approx(3.75).epsilon(1e-12));
}

TEST_CASE("non-finite integrand rejected") {
    QuadratureConfig cfg;
    auto bad = [](double x) { return 1.0 / x; };
    CHECK_THROWS_AS(integrate(bad, -1.0, 1.0, cfg), NonFiniteIntegrand);
}

TEST_CASE("ar1 filter coefficients") {
    QuadratureConfig cfg;
    for (double phi : {-0.5, 0.5, 0.9}) {
        auto fhat = [phi](double x) {
            return 1.0 / (1.0 - phi * std::exp(std::complex<double>(0.0, -x)));
        };
        for (int k : {0, 1, 3, 10, 25}) {
            const double expected = std::pow(phi, k);
            CHECK(time_filter_coeff(fhat, k, cfg) == doctest::Approx(expected).epsilon(1e-11));
        }
        CHECK(time_filter_coeff(fhat, -3, cfg) == doctest::Approx(0.0).epsilon(1e-11));
    }
}

TEST_CASE("fractional-difference filter coefficients") {
    // psi_k of (1 - e^{-ix})^{-d} equals Gamma(k+d) / (Gamma(d) Gamma(k+1))
    for (double d : {-0.25, 0.25}) {
        QuadratureConfig cfg;
        cfg.rho = default_rho(d);
        auto fhat = [d](double x) {
            const std::complex<double> base = 1.0 - std::exp(std::complex<double>(0.0, -x));
            return std::pow(base, -d);
        };
        double worst = 0.0;
        double psi = 1.0;  // psi_k = psi_{k-1} (k - 1 + d) / k, sign-correct for d < 0
        int kprev = 0;
        for (int k : {0, 1, 2, 5, 20}) {
            for (; kprev < k; ++kprev) psi *= (kprev + d) / (kprev + 1.0);
            const double got = time_filter_coeff(fhat, k, cfg, d > 0.0);
            worst = std::max(worst, std::abs(got - psi));
        }
        CHECK(worst < 5e-10);
    }
}

TEST_CASE("fractional autocovariance via even transform") {
    const double d = 0.2;
    QuadratureConfig cfg;
    cfg.rho = default_rho(d);
    auto fhat = [d](double x) {
        const double s = 2.0 * std::sin(0.5 * x);  // |1 - e^{-ix}|, stable near 0
        return std::pow(s * s, -d);
    };
    auto expected = [d](int j) {
        return std::exp(std::lgamma(1.0 - 2.0 * d) - std::lgamma(d) - std::lgamma(1.0 - d) +
                        std::lgamma(j + d) - std::lgamma(j - d + 1.0));
    };
    // the excluded origin ball removes mass ~ rho^{1-2d}/((1-2d) pi) ~ 3e-8
    for (int j : {1, 2, 10}) {
        CHECK(time_filter_coeff_even(fhat, j, cfg, true) ==
              doctest::Approx(expected(j)).epsilon(1e-5));
    }
}

TEST_CASE("acvf of the ou velocity") {
    const ProcessModel m = ProcessModel::ou(1.5, 1.0);
    const SpectralDensityFn f = spectral_density(m);
    QuadratureConfig cfg;
    for (double t : {0.0, 1.0, 4.0}) {
        const double expected = std::exp(-1.5 * t) / (2.0 * 1.5);
        CHECK(acvf_from_density(f, t, cfg) == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("acvf with fractional origin singularity stays finite") {
    const ProcessModel m = ProcessModel::fou(1.0, 1.0, 0.25);
    const SpectralDensityFn f = spectral_density(m);
    QuadratureConfig cfg;
    cfg.rho = default_rho(0.25);
    const double r0 = acvf_from_density(f, 0.0, cfg);
    const double r1 = acvf_from_density(f, 1.0, cfg);
    CHECK(r0 > 0.0);
    CHECK(std::abs(r1) < r0);
}

TEST_SUITE_END();
