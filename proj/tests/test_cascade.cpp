#include <doctest.h>

#include <cmath>
#include <numeric>

#include "adsim/cascade.hpp"
#include "adsim/quadrature.hpp"

using namespace adsim;

TEST_SUITE_BEGIN("cascade");

TEST_CASE("upsampling doubles the length with interleaved zeros") {
    const std::vector<double> x{1.0, 2.0, 3.0};
    const std::vector<double> y = upsample2(x);
    CHECK(y == std::vector<double>{1.0, 0.0, 2.0, 0.0, 3.0, 0.0});
}

TEST_CASE("refinement length bookkeeping") {
    // identity-like stub filters of half-lag T: len(out) = 2 len(in) - (2T+1)
    const CmfPair cmf = daubechies_cmf(2);
    QuadratureConfig cfg;
    TruncationPolicy policy{6, 0.0};
    auto one = [](double) { return 1.0; };
    const ScaleFilters sf = build_scale_filters_from_spectra(one, one, 0, cmf, cfg, policy);
    const int L = 2 * sf.trunc_lag + 1;
    const std::vector<double> v(40, 1.0), e(40, 0.0);
    const std::vector<double> out = refine(v, e, sf);
    CHECK(static_cast<int>(out.size()) == 2 * 40 - L);
}

TEST_CASE("white-noise preservation through a stub refinement") {
    // with uhat = hhat and vhat = ghat the refinement maps iid N(0,1) input
    // plus iid N(0,1) noise to iid N(0,1) output (exact CMF orthogonality)
    const CmfPair cmf = daubechies_cmf(4);
    QuadratureConfig cfg;
    TruncationPolicy policy{8, 0.0};
    auto one = [](double) { return 1.0; };
    const ScaleFilters sf = build_scale_filters_from_spectra(one, one, 0, cmf, cfg, policy);
    GaussianRng g(RngStream{123, 5});
    const int n = 60000;
    std::vector<double> v(n), e(n);
    for (int i = 0; i < n; ++i) {
        v[i] = g.normal();
        e[i] = g.normal();
    }
    const std::vector<double> out = refine(v, e, sf);
    double m1 = 0.0, m2 = 0.0, lag1 = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        m1 += out[i];
        m2 += out[i] * out[i];
        if (i + 1 < out.size()) lag1 += out[i] * out[i + 1];
    }
    const double nn = static_cast<double>(out.size());
    CHECK(std::abs(m1 / nn) < 0.02);
    CHECK(m2 / nn == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(lag1 / nn) < 0.02);
}

TEST_CASE("filter bank and output lengths") {
    CascadeConfig cfg(ProcessModel::ou(1.0, 1.0));
    cfg.J_final = 4;
    cfg.duration = 2;
    QuadratureConfig quad;
    const FilterBank bank = build_filter_bank(cfg, quad);
    CHECK(static_cast<int>(bank.scales.size()) == cfg.J_final);
    for (const ScaleFilters& sf : bank.scales) {
        CHECK(static_cast<int>(sf.u.size()) == bank.filter_length());
        CHECK(static_cast<int>(sf.v.size()) == bank.filter_length());
    }
    REQUIRE(bank.init_acvf.has_value());
    CHECK(bank.init_acvf->values[0] > 0.0);

    const SamplePath path = simulate_velocity(cfg, bank);
    CHECK(path.J == cfg.J_final);
    CHECK(!path.physical);
    CHECK(static_cast<int>(path.values.size()) ==
          cfg.duration * (1 << cfg.J_final) + bank.filter_length());
}

TEST_CASE("simulation is deterministic and replicate-indexed") {
    CascadeConfig cfg(ProcessModel::ou(1.0, 1.0));
    cfg.J_final = 3;
    cfg.seed = 99;
    QuadratureConfig quad;
    const FilterBank bank = build_filter_bank(cfg, quad);
    const SamplePath a = simulate_velocity(cfg, bank);
    const SamplePath b = simulate_velocity(cfg, bank);
    CHECK(a.values == b.values);
    cfg.replicate = 1;
    const SamplePath c = simulate_velocity(cfg, bank);
    CHECK(a.values != c.values);
}

TEST_CASE("snapshots extend coarse randomness rather than reshuffling it") {
    CascadeConfig cfg(ProcessModel::ou(1.0, 1.0));
    cfg.J_final = 6;
    cfg.seed = 17;
    QuadratureConfig quad;
    const FilterBank bank = build_filter_bank(cfg, quad);
    const std::vector<SamplePath> snaps = simulate_velocity_snapshots(cfg, bank, {4, 6});
    REQUIRE(snaps.size() == 2);
    CHECK(snaps[0].J == 4);
    CHECK(snaps[1].J == 6);
    // the deep run's final scale equals the plain simulation
    const SamplePath direct = simulate_velocity(cfg, bank);
    CHECK(snaps[1].values == direct.values);
    // the recorded coarse path does not depend on which scales are requested
    const std::vector<SamplePath> only4 = simulate_velocity_snapshots(cfg, bank, {4});
    REQUIRE(only4.size() == 1);
    CHECK(only4[0].values == snaps[0].values);
}

TEST_CASE("physical rescaling, positions, and increments") {
    SamplePath raw{2, {1.0, -2.0, 0.5, 3.0}, false};
    const SamplePath phys = to_physical(raw);
    CHECK(phys.physical);
    CHECK(phys.values[0] == doctest::Approx(2.0));
    CHECK(phys.values[3] == doctest::Approx(6.0));

    const SamplePath x = position_path(raw);
    CHECK(x.values.size() == raw.values.size() + 1);
    CHECK(x.values[0] == 0.0);
    // X[k+1] - X[k] = 2^{-J/2} V_k
    CHECK(x.values[1] - x.values[0] == doctest::Approx(0.5 * 1.0));
    CHECK(x.values[2] - x.values[1] == doctest::Approx(0.5 * -2.0));
    CHECK_THROWS_AS(position_path(phys), ParameterOutOfRange);

    const std::vector<double> inc = increments(x, 2);
    CHECK(inc.size() == 2);
    CHECK(inc[0] == doctest::Approx(x.values[2] - x.values[0]));
    CHECK(inc[1] == doctest::Approx(x.values[4] - x.values[2]));
}

TEST_CASE("ou cascade matches the stationary law of the target process") {
    // long physical path: variance sigma^2/(2 zeta), unit-step autocorrelation
    // e^{-zeta Delta} with Delta = 2^{-J}
    const double zeta = 1.0;
    CascadeConfig cfg(ProcessModel::ou(zeta, 1.0));
    cfg.J_final = 5;
    cfg.duration = 64;
    cfg.seed = 4242;
    QuadratureConfig quad;
    const FilterBank bank = build_filter_bank(cfg, quad);

    double r0 = 0.0, r1 = 0.0;
    long n_tot = 0;
    for (int rep = 0; rep < 8; ++rep) {
        cfg.replicate = static_cast<std::uint64_t>(rep);
        const SamplePath phys = to_physical(simulate_velocity(cfg, bank));
        for (std::size_t i = 0; i + 1 < phys.values.size(); ++i) {
            r0 += phys.values[i] * phys.values[i];
            r1 += phys.values[i] * phys.values[i + 1];
        }
        n_tot += static_cast<long>(phys.values.size()) - 1;
    }
    r0 /= static_cast<double>(n_tot);
    r1 /= static_cast<double>(n_tot);
    CHECK(r0 == doctest::Approx(1.0 / (2.0 * zeta)).epsilon(0.05));
    CHECK(r1 / r0 == doctest::Approx(std::exp(-zeta / 32.0)).epsilon(0.01));
}

TEST_SUITE_END();
