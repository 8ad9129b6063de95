#pragma once

#include <complex>
#include <vector>

#include "adsim/models.hpp"
#include "adsim/quadrature.hpp"

namespace adsim {

/// Conjugate mirror filter pair of an orthonormal wavelet basis.
/// Convention: sum h_k = sqrt(2), g_k = (-1)^k h_{L-1-k}.
struct CmfPair {
    std::vector<double> h;
    std::vector<double> g;
    int vanishing_moments = 0;
};

/// Daubechies extremal-phase CMFs.  N = 1 gives Haar (test use); the cascade
/// default is N = 4.
CmfPair daubechies_cmf(int vanishing_moments);

/// hat{c}(x) = sum_k c_k e^{-ikx} for a causal coefficient sequence.
std::complex<double> cmf_transfer(const std::vector<double>& coeffs, double x);

/// Map x into [-pi, pi) by 2pi-periodic folding.
inline double fold_2pi(double x) {
    double y = x - 2.0 * M_PI * std::round(x / (2.0 * M_PI));
    if (y >= M_PI) y -= 2.0 * M_PI;
    return y;
}

enum class Smoothing { Truncated, Smoothed };

/// Per-scale discretization filter ghat_j on [-pi, pi), periodically extended.
/// Composite of the ratio components of the model's spectral filter, with the
/// model's spectral constant included so that ghat_j(2^{-j} x) -> ghat(x).
struct DiscretizationFilter {
    ProcessModel model;
    int j = 0;
    Smoothing smoothing = Smoothing::Truncated;
    double upsilon = 1.0;

    double operator()(double x) const;
};

/// Validates the smoothing constraint (x*(j) real) at construction.
DiscretizationFilter make_discretization_filter(const ProcessModel& model, int j,
                                                Smoothing smoothing, double upsilon = 1.0);

/// Relocated minimum x*(j) for the OU/fOU smoothed component.
double smoothing_xstar(double zeta, double upsilon, int j);

enum class GjVariant { Zeta, Power, GammaD, ExactOu };

/// Ratio diagnostic G_j(x) = ghat_j(x) / ghat-component(2^j x) on the
/// diagnostic domain |x| <= 4pi/3.  ExactOu returns the modulus of the exact
/// AR(1)-based ratio for the OU process.
double eval_Gj(const ProcessModel& model, int j, double x, GjVariant variant);

/// max over j in [j_lo, j_hi] of |G_j(0) - 1| * 2^j.
double assumption5_diagnostic(const ProcessModel& model, GjVariant variant, int j_lo, int j_hi);

struct TruncationPolicy {
    int max_lag = 40;
    double threshold = 1e-9;
};

inline TruncationPolicy default_policy(const ProcessModel& model) {
    return model.is_fgle() ? TruncationPolicy{80, 0.0} : TruncationPolicy{40, 1e-9};
}

/// Time-domain cascade filter pair at scale j; coefficients indexed -T..T.
struct ScaleFilters {
    int j = 0;
    std::vector<double> u;  // size 2T+1, entry [T + k] holds lag k
    std::vector<double> v;
    int trunc_lag = 0;
    double trunc_threshold = 0.0;
    double max_tail_value = 0.0;  // largest |coef| at the truncation boundary

    int half_lag() const { return trunc_lag; }
};

/// Builds u_j, v_j from uhat_j = ghat_{j+1}(x)/ghat_j(2x) * uhat(x) and
/// vhat_j = ghat_{j+1}(x) * vhat(x), with the common |x|^{+-delta} origin
/// factors of the low-pass ratio cancelled analytically.
ScaleFilters build_scale_filters(const ProcessModel& model, int j, const CmfPair& cmf,
                                 Smoothing smoothing, const QuadratureConfig& cfg,
                                 const TruncationPolicy& policy, double upsilon = 1.0);

/// Generic builder from explicit spectral factors (test/stub use): integrates
/// ratio(x)*uhat(x) and gj1(x)*vhat(x).
ScaleFilters build_scale_filters_from_spectra(const std::function<double(double)>& ratio,
                                              const std::function<double(double)>& gj1,
                                              int j, const CmfPair& cmf,
                                              const QuadratureConfig& cfg,
                                              const TruncationPolicy& policy,
                                              bool gj1_singular_at_origin = false);

/// Symmetric time-domain initialization filter: inverse transform of
/// |ghat_0(x)|, truncated at |k| <= T0.  Entry [T0 + k] holds lag k.
std::vector<double> g0_time_filter(const ProcessModel& model, const CmfPair& cmf,
                                   Smoothing smoothing, int T0, const QuadratureConfig& cfg,
                                   double upsilon = 1.0);

}  // namespace adsim
