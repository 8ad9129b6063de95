#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "adsim/exact.hpp"
#include "adsim/models.hpp"
#include "adsim/wavelets.hpp"

namespace adsim {

/// Velocity discretization at dyadic scale J: values are V_{J,k} (raw) unless
/// `physical` is set, in which case they carry the 2^{J/2} rescaling.
struct SamplePath {
    int J = 0;
    std::vector<double> values;
    bool physical = false;
};

struct CmeInit {
    int n0 = 1024;  // length of the precomputed initialization acvf table
};
struct FilterConvolutionInit {
    int T0 = 400;  // half-lag of the g_0 = v_0 convolution filter
};

struct CascadeConfig {
    explicit CascadeConfig(ProcessModel m) : model(std::move(m)) {}

    ProcessModel model;
    int J_final = 6;
    std::variant<CmeInit, FilterConvolutionInit> init = CmeInit{};
    Smoothing smoothing = Smoothing::Smoothed;
    TruncationPolicy policy{};
    int vanishing_moments = 4;
    double upsilon = 1.0;
    int duration = 1;  // simulate over [0, duration], duration a positive integer
    std::uint64_t seed = 0;
    std::uint64_t replicate = 0;
};

/// Per-scale filters padded to a common length plus initialization data.
struct FilterBank {
    std::vector<ScaleFilters> scales;  // j = 0 .. J_final - 1
    int common_half_lag = 0;           // T: every filter has length L = 2T + 1
    std::optional<AcvfTable> init_acvf;        // CME initialization
    std::vector<double> init_filter;           // convolution initialization (may be empty)

    int filter_length() const { return 2 * common_half_lag + 1; }
};

FilterBank build_filter_bank(const CascadeConfig& cfg, const QuadratureConfig& quad);

/// output[2n] = input[n], output[2n+1] = 0; length doubles.
std::vector<double> upsample2(const std::vector<double>& seq);

/// One refinement step: V_{j+1} = u_j * up2(V_j) + v_j * up2(eps_j), where the
/// upsampling inserts zeros between entries, each full convolution drops its
/// L-1 boundary-affected entries at both ends, and L = 2T+1 is the common
/// filter length.  len(out) = 2 len(in) - L.
std::vector<double> refine(const std::vector<double>& V_j, const std::vector<double>& eps_j,
                           const ScaleFilters& filters);

/// Runs initialization plus refinements up to J_final; raw-scale output of
/// length duration * 2^J + L.
SamplePath simulate_velocity(const CascadeConfig& cfg, const FilterBank& bank);

/// Same cascade run, recording the raw path at every requested scale (each
/// requested J must be <= cfg.J_final).  Noise streams are indexed per scale,
/// so deeper runs extend rather than reshuffle coarse-scale randomness.
std::vector<SamplePath> simulate_velocity_snapshots(const CascadeConfig& cfg,
                                                    const FilterBank& bank,
                                                    const std::vector<int>& scales);

/// Physical-scale view: multiplies raw values by 2^{J/2} exactly once.
SamplePath to_physical(const SamplePath& raw);

/// Riemann-sum position path X[n] = sum_{k<n} 2^{J/2} V_{J,k} 2^{-J}; X[0] = 0.
SamplePath position_path(const SamplePath& raw_velocity);

/// Y_n = X[(n+1) step] - X[n step].
std::vector<double> increments(const SamplePath& x, int step);

}  // namespace adsim
