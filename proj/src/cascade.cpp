#include "adsim/cascade.hpp"

#include <algorithm>
#include <cmath>

#include "adsim/rng.hpp"
#include "adsim/spectra.hpp"

namespace adsim {

namespace {

constexpr std::uint64_t kStreamsPerReplicate = 64;

// Full convolution of `filt` with the zero-stuffed upsampling of `in`
// (zeros between entries, length 2n-1), dropping L-1 entries at each end.
std::vector<double> conv_up2_trimmed(const std::vector<double>& filt,
                                     const std::vector<double>& in) {
    const int L = static_cast<int>(filt.size());
    const int n = static_cast<int>(in.size());
    const int m = 2 * n - 1;
    const int out_len = 2 * n - L;
    if (out_len < 1) throw LengthMismatch("refine: input shorter than filter support");
    std::vector<double> out(out_len, 0.0);
    for (int i = 0; i < n; ++i) {
        const double x = in[i];
        if (x == 0.0) continue;
        const int t0 = 2 * i;  // position of in[i] in the upsampled vector
        const int k_lo = std::max(0, (L - 1) - t0);
        const int k_hi = std::min(L - 1, (m - L) - t0 + (L - 1));
        for (int k = k_lo; k <= k_hi; ++k) out[t0 + k - (L - 1)] += filt[k] * x;
    }
    return out;
}

std::vector<double> draw_noise(std::size_t n, GaussianRng& rng) {
    std::vector<double> eps(n);
    for (double& v : eps) v = rng.normal();
    return eps;
}

std::vector<double> initial_sequence(const CascadeConfig& cfg, const FilterBank& bank,
                                     int need) {
    GaussianRng rng(RngStream{cfg.seed, cfg.replicate * kStreamsPerReplicate + 0});
    if (std::holds_alternative<CmeInit>(cfg.init)) {
        if (!bank.init_acvf)
            throw ParameterOutOfRange("cascade: CME initialization needs an acvf table");
        CmeSampler sampler(*bank.init_acvf, need);
        return sampler.sample(rng);
    }
    const std::vector<double>& g0 = bank.init_filter;
    if (g0.empty())
        throw ParameterOutOfRange("cascade: convolution initialization needs a filter");
    const int gl = static_cast<int>(g0.size());
    std::vector<double> xi = draw_noise(static_cast<std::size_t>(need + gl - 1), rng);
    std::vector<double> v0(need, 0.0);
    // central extraction of the full convolution g0 * xi
    for (int s = 0; s < need; ++s) {
        double acc = 0.0;
        for (int k = 0; k < gl; ++k) acc += g0[k] * xi[s + gl - 1 - k];
        v0[s] = acc;
    }
    return v0;
}

void pad_to_half_lag(std::vector<double>& coeffs, int from, int to) {
    if (from == to) return;
    std::vector<double> padded(2 * to + 1, 0.0);
    for (int k = -from; k <= from; ++k) padded[to + k] = coeffs[from + k];
    coeffs = std::move(padded);
}

}  // namespace

FilterBank build_filter_bank(const CascadeConfig& cfg, const QuadratureConfig& quad) {
    if (cfg.J_final < 0) throw ParameterOutOfRange("cascade: J_final must be >= 0");
    if (cfg.duration < 1) throw ParameterOutOfRange("cascade: duration must be >= 1");
    const CmfPair cmf = daubechies_cmf(cfg.vanishing_moments);
    FilterBank bank;
    bank.scales.reserve(cfg.J_final);
    int T = 0;
    for (int j = 0; j < cfg.J_final; ++j) {
        bank.scales.push_back(build_scale_filters(cfg.model, j, cmf, cfg.smoothing, quad,
                                                  cfg.policy, cfg.upsilon));
        T = std::max(T, bank.scales.back().trunc_lag);
    }
    if (cfg.J_final == 0) T = cfg.policy.max_lag;
    for (auto& sf : bank.scales) {
        pad_to_half_lag(sf.u, sf.trunc_lag, T);
        pad_to_half_lag(sf.v, sf.trunc_lag, T);
        sf.trunc_lag = T;
    }
    bank.common_half_lag = T;

    const int L = bank.filter_length();
    if (std::holds_alternative<CmeInit>(cfg.init)) {
        const int n0 = std::get<CmeInit>(cfg.init).n0;
        const int table_len = std::max(n0, cfg.duration + L);
        // the initialization table feeds a statistical sampler; ~1e-9 accuracy
        // suffices and keeps the high-lag oscillatory integrals affordable
        QuadratureConfig init_quad = quad;
        init_quad.abs_tol = std::max(quad.abs_tol, 1e-9);
        init_quad.rel_tol = std::max(quad.rel_tol, 1e-7);
        init_quad.max_subdivisions = std::max(quad.max_subdivisions, 500000);
        std::vector<double> r0(table_len);
        for (int k = 0; k < table_len; ++k)
            r0[k] = velocity_acvf_for_init(cfg.model, cfg.smoothing, k, init_quad,
                                           cfg.vanishing_moments, cfg.upsilon);
        bank.init_acvf = make_acvf_table(std::move(r0), "scale-0 velocity acvf");
    } else {
        const int T0 = std::get<FilterConvolutionInit>(cfg.init).T0;
        bank.init_filter =
            g0_time_filter(cfg.model, cmf, cfg.smoothing, T0, quad, cfg.upsilon);
    }
    return bank;
}

std::vector<double> upsample2(const std::vector<double>& seq) {
    std::vector<double> out(2 * seq.size(), 0.0);
    for (std::size_t i = 0; i < seq.size(); ++i) out[2 * i] = seq[i];
    return out;
}

std::vector<double> refine(const std::vector<double>& V_j, const std::vector<double>& eps_j,
                           const ScaleFilters& filters) {
    if (V_j.size() != eps_j.size())
        throw LengthMismatch("refine: V_j and eps_j must have equal length");
    if (filters.u.size() != filters.v.size())
        throw LengthMismatch("refine: u and v must have equal length");
    std::vector<double> low = conv_up2_trimmed(filters.u, V_j);
    const std::vector<double> high = conv_up2_trimmed(filters.v, eps_j);
    for (std::size_t i = 0; i < low.size(); ++i) low[i] += high[i];
    return low;
}

SamplePath simulate_velocity(const CascadeConfig& cfg, const FilterBank& bank) {
    return simulate_velocity_snapshots(cfg, bank, {cfg.J_final}).front();
}

std::vector<SamplePath> simulate_velocity_snapshots(const CascadeConfig& cfg,
                                                    const FilterBank& bank,
                                                    const std::vector<int>& scales) {
    if (static_cast<int>(bank.scales.size()) < cfg.J_final)
        throw ParameterOutOfRange("cascade: filter bank has too few scales");
    for (int s : scales)
        if (s < 0 || s > cfg.J_final)
            throw ParameterOutOfRange("cascade: requested scale outside [0, J_final]");

    const int L = bank.filter_length();
    std::vector<double> v = initial_sequence(cfg, bank, cfg.duration + L);
    std::vector<SamplePath> out;
    auto record = [&](int j) {
        for (int s : scales)
            if (s == j) out.push_back(SamplePath{j, v, false});
    };
    record(0);
    for (int j = 0; j < cfg.J_final; ++j) {
        GaussianRng rng(
            RngStream{cfg.seed, cfg.replicate * kStreamsPerReplicate + 1 + static_cast<std::uint64_t>(j)});
        const std::vector<double> eps = draw_noise(v.size(), rng);
        v = refine(v, eps, bank.scales[static_cast<std::size_t>(j)]);
        record(j + 1);
    }
    // preserve request order
    std::vector<SamplePath> ordered;
    ordered.reserve(scales.size());
    for (int s : scales)
        for (auto& p : out)
            if (p.J == s) ordered.push_back(p);
    return ordered;
}

SamplePath to_physical(const SamplePath& raw) {
    if (raw.physical) throw ParameterOutOfRange("path is already physical-scale");
    SamplePath out = raw;
    const double scale = std::exp2(0.5 * raw.J);
    for (double& v : out.values) v *= scale;
    out.physical = true;
    return out;
}

SamplePath position_path(const SamplePath& raw_velocity) {
    if (raw_velocity.physical)
        throw ParameterOutOfRange("position_path expects a raw-scale velocity path");
    SamplePath x;
    x.J = raw_velocity.J;
    x.physical = true;
    const double w = std::exp2(-0.5 * raw_velocity.J);  // 2^{J/2} * 2^{-J}
    x.values.resize(raw_velocity.values.size() + 1);
    x.values[0] = 0.0;
    for (std::size_t k = 0; k < raw_velocity.values.size(); ++k)
        x.values[k + 1] = x.values[k] + w * raw_velocity.values[k];
    return x;
}

std::vector<double> increments(const SamplePath& x, int step) {
    if (step < 1) throw ParameterOutOfRange("increments: step must be positive");
    const std::size_t n = x.values.size();
    if (n < static_cast<std::size_t>(step) + 1) return {};
    const std::size_t count = (n - 1) / static_cast<std::size_t>(step);
    std::vector<double> y(count);
    for (std::size_t k = 0; k < count; ++k)
        y[k] = x.values[(k + 1) * step] - x.values[k * step];
    return y;
}

}  // namespace adsim
