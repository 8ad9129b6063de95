#include <doctest.h>

#include <cmath>

#include "adsim/models.hpp"

using namespace adsim;

TEST_SUITE_BEGIN("models");

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ProcessModel::ou(0.0, 1.0), ParameterOutOfRange);
    CHECK_THROWS_AS(ProcessModel::ou(1.0, -1.0), ParameterOutOfRange);
    CHECK_THROWS_AS(ProcessModel::fou(1.0, 1.0, 0.5), ParameterOutOfRange);
    CHECK_THROWS_AS(ProcessModel::fou(1.0, 1.0, -0.6), ParameterOutOfRange);
    CHECK_THROWS_AS(ProcessModel::fgle(1.0, 1.0, -0.1), ParameterOutOfRange);
    CHECK_THROWS_AS(ProcessModel::fgle(1.0, 0.0, 0.25), ParameterOutOfRange);
    CHECK(ProcessModel::fou(1.0, 1.0, 0.25).is_fou());
}

TEST_CASE("ou spectral filter") {
    const ProcessModel m = ProcessModel::ou(2.0, 3.0);
    CHECK(eval_ghat(m, 0.0) == doctest::Approx(1.5));
    CHECK(eval_ghat(m, 2.0) == doctest::Approx(3.0 / std::sqrt(8.0)));
    CHECK(eval_ghat(m, -2.0) == doctest::Approx(eval_ghat(m, 2.0)));
}

TEST_CASE("fou spectral filter and origin") {
    const ProcessModel m = ProcessModel::fou(1.0, 1.0, 0.25);
    CHECK_THROWS_AS(eval_ghat(m, 0.0), SingularityAtOrigin);
    CHECK(std::isinf(eval_ghat(m, 0.0, true)));
    // d -> 0 recovers the OU filter
    const ProcessModel m0 = ProcessModel::fou(1.0, 1.0, 1e-12);
    const ProcessModel ou = ProcessModel::ou(1.0, 1.0);
    CHECK(eval_ghat(m0, 0.7) == doctest::Approx(eval_ghat(ou, 0.7)).epsilon(1e-9));
    CHECK(delta_exponent(m) == doctest::Approx(0.25));
}

TEST_CASE("fgle constants identity") {
    const double zeta = 2.0, mass = 1.0, d = 0.25;
    const FgleConstants k = fgle_constants(zeta, mass, d);
    const double gam = std::tgamma(2.0 * d + 2.0);
    CHECK(k.gamma0 == doctest::Approx(zeta * zeta * gam * gam));
    CHECK(k.beta == doctest::Approx(1.5));
    // the denominator polynomial equals (m y + b)^2 + a^2 with y = |x|^beta
    for (double x : {0.3, 1.0, 2.5}) {
        const double y = std::pow(x, k.beta);
        const double poly = k.gamma0 + k.gamma1 * y + k.gamma2 * y * y;
        CHECK(poly == doctest::Approx((mass * y + k.b) * (mass * y + k.b) + k.a * k.a));
        CHECK(poly > 0.0);
    }
    const ProcessModel m = ProcessModel::fgle(zeta, mass, d);
    CHECK(delta_exponent(m) == doctest::Approx(-0.25));
    CHECK(eval_ghat(m, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("spectral density is ghat squared") {
    const ProcessModel m = ProcessModel::fou(1.0, 2.0, -0.2);
    const SpectralDensityFn f = spectral_density(m);
    const double g = eval_ghat(m, 1.3);
    CHECK(f.evaluator(1.3) == doctest::Approx(g * g));
    CHECK(f.origin_exponent == doctest::Approx(-0.2));
}

TEST_SUITE_END();
