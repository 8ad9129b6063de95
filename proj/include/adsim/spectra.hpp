#pragma once

#include "adsim/models.hpp"
#include "adsim/quadrature.hpp"
#include "adsim/wavelets.hpp"

namespace adsim {

enum class AliasKind { SampledVelocityFou, IncrementFou, IncrementFgle };

/// Discrete-time spectral density on [-pi, pi) as an aliasing sum over k of
/// the continuous-time density at x + 2 pi k.  The evaluator sums |k| <=
/// alias_terms and adds an analytic power-law tail integral; tail_bound is
/// the estimated residual of the corrected evaluation.
struct AliasedDensity {
    ProcessModel model;
    AliasKind kind;
    int alias_terms = 0;
    double tail_bound = 0.0;

    double operator()(double x) const;
};

AliasedDensity make_aliased_density(const ProcessModel& model, AliasKind kind,
                                    double tail_target = 1e-10);

/// Literal truncated aliasing sums (no tail correction); oracle/diagnostic use.
double sampled_fou_density(const ProcessModel& fou, double x, int K);
double fou_increment_density(const ProcessModel& fou, double x, int K);
double fgle_increment_density(const ProcessModel& fgle, double x, int K);

/// acvf of Delta X(n) = X(n+1) - X(n) for the fOU position process, via the
/// real-line integral with the |(1 - e^{-ix})/(ix)|^2 window.
double deltaX_acvf_fou(const ProcessModel& fou, int t, const QuadratureConfig& cfg);
double deltaX_acvf_fgle(const ProcessModel& fgle, int t, const QuadratureConfig& cfg);

/// acvf of the discrete-time scale-0 process with spectral density
/// |ghat_0(x)|^2; feeds the CME initializer.
double velocity_acvf_for_init(const ProcessModel& model, Smoothing smoothing, int lag,
                              const QuadratureConfig& cfg, int vanishing_moments = 4,
                              double upsilon = 1.0);

}  // namespace adsim
