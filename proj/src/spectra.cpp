#include "adsim/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace adsim {

namespace {

// |(1 - e^{-ix})/(ix)|^2, continuous at 0 (-> 1), evaluated stably.
double window_sq(double x) {
    if (std::abs(x) < 1e-6) return 1.0 - x * x / 12.0;
    const double s = std::sin(0.5 * x);
    return 4.0 * s * s / (x * x);
}

// |1 - e^{-ix}|^2 = 4 sin^2(x/2), stable near 0
double diff_sq(double x) {
    const double s = std::sin(0.5 * x);
    return 4.0 * s * s;
}

double fou_spec_constant(const Fou& p) {
    return p.sigma * p.sigma * std::tgamma(2.0 * p.d + 2.0) * std::sin(M_PI * (p.d + 0.5));
}

struct AliasTerms {
    // continuous-time density factor evaluated at an alias frequency y != 0
    std::function<double(double)> alias;   // density at y, sans the x-dependent window
    std::function<double(double)> central; // full central term at x
    double window_at;                      // multiplies alias terms: diff_sq(x) or 1
    double p;                              // alias decay: term(y) ~ |y|^{-p}
};

AliasTerms build_terms(const ProcessModel& model, AliasKind kind, double x) {
    AliasTerms t;
    switch (kind) {
        case AliasKind::SampledVelocityFou: {
            if (!model.is_fou())
                throw ParameterOutOfRange("sampled velocity density requires an fOU model");
            const Fou p = model.as_fou();
            const double C = fou_spec_constant(p);
            if (x == 0.0 && p.d > 0.0)
                throw SingularityAtOrigin("sampled fOU density diverges at x = 0 for d > 0");
            t.alias = [C, p](double y) {
                return C / (p.zeta * p.zeta + y * y) * std::pow(std::abs(y), -2.0 * p.d);
            };
            t.central = t.alias;
            t.window_at = 1.0;
            t.p = 2.0 * p.d + 2.0;
            break;
        }
        case AliasKind::IncrementFou: {
            if (!model.is_fou())
                throw ParameterOutOfRange("increment density requires an fOU model");
            const Fou p = model.as_fou();
            const double C = fou_spec_constant(p);
            if (x == 0.0 && p.d > 0.0)
                throw SingularityAtOrigin("fOU increment density diverges at x = 0 for d > 0");
            t.alias = [C, p](double y) {
                return C / (p.zeta * p.zeta + y * y) * std::pow(std::abs(y), -2.0 * p.d - 2.0);
            };
            t.central = [C, p](double xx) {
                if (xx == 0.0)  // d < 0 limit 0; d = 0 continuous limit
                    return p.d == 0.0 ? C / (p.zeta * p.zeta) : 0.0;
                return C * window_sq(xx) / (p.zeta * p.zeta + xx * xx) *
                       std::pow(std::abs(xx), -2.0 * p.d);
            };
            t.window_at = diff_sq(x);
            t.p = 2.0 * p.d + 4.0;
            break;
        }
        case AliasKind::IncrementFgle: {
            if (!model.is_fgle())
                throw ParameterOutOfRange("fGLE increment density requires an fGLE model");
            const Fgle p = model.as_fgle();
            const FgleConstants k = fgle_constants(p.zeta, p.m, p.d, p.thermal);
            const double c2 = k.c * k.c;
            t.alias = [c2, k, p](double y) {
                const double ay = std::abs(y);
                const double poly = k.gamma0 + k.gamma1 * std::pow(ay, k.beta) +
                                    k.gamma2 * std::pow(ay, 2.0 * k.beta);
                return c2 * std::pow(ay, 2.0 * p.d - 2.0) / poly;
            };
            t.central = [c2, k, p](double xx) {
                const double ax = std::abs(xx);
                if (ax == 0.0) return 0.0;  // ~ |x|^{2d} -> 0
                const double poly = k.gamma0 + k.gamma1 * std::pow(ax, k.beta) +
                                    k.gamma2 * std::pow(ax, 2.0 * k.beta);
                return c2 * window_sq(xx) * std::pow(ax, 2.0 * p.d) / poly;
            };
            t.window_at = diff_sq(x);
            t.p = 2.0 * p.d + 4.0;
            break;
        }
        default:
            throw ParameterOutOfRange("unknown aliased density kind");
    }
    return t;
}

double truncated_sum(const ProcessModel& model, AliasKind kind, double x, int K) {
    if (K < 1) throw ParameterOutOfRange("aliasing sum requires K >= 1");
    const AliasTerms t = build_terms(model, kind, x);
    double acc = t.central(x);
    for (int k = 1; k <= K; ++k) {
        acc += t.window_at * (t.alias(x + 2.0 * M_PI * k) + t.alias(x - 2.0 * M_PI * k));
    }
    return acc;
}

// Power-law tail integral from the half-integer boundary U = K + 1/2:
// sum_{k > K} tau(k) ~ int_U^inf tau = tau(U) |y(U)| / (2 pi (p - 1)).
double tail_correction(const AliasTerms& t, double x, int K) {
    const double U = K + 0.5;
    const double yp = x + 2.0 * M_PI * U;
    const double ym = x - 2.0 * M_PI * U;
    return t.window_at *
           (t.alias(yp) * std::abs(yp) + t.alias(ym) * std::abs(ym)) / (2.0 * M_PI * (t.p - 1.0));
}

// Residual after correction: midpoint-rule and power-law calibration errors,
// both of relative order ~ 1/K of the correction itself.
double tail_residual(const AliasTerms& t, double x, int K) {
    return tail_correction(t, x, K) * (t.p + 2.0) / static_cast<double>(K);
}

}  // namespace

double sampled_fou_density(const ProcessModel& fou, double x, int K) {
    return truncated_sum(fou, AliasKind::SampledVelocityFou, x, K);
}

double fou_increment_density(const ProcessModel& fou, double x, int K) {
    return truncated_sum(fou, AliasKind::IncrementFou, x, K);
}

double fgle_increment_density(const ProcessModel& fgle, double x, int K) {
    return truncated_sum(fgle, AliasKind::IncrementFgle, x, K);
}

double AliasedDensity::operator()(double x) const {
    const AliasTerms t = build_terms(model, kind, x);
    double acc = t.central(x);
    for (int k = 1; k <= alias_terms; ++k)
        acc += t.window_at * (t.alias(x + 2.0 * M_PI * k) + t.alias(x - 2.0 * M_PI * k));
    return acc + tail_correction(t, x, alias_terms);
}

AliasedDensity make_aliased_density(const ProcessModel& model, AliasKind kind,
                                    double tail_target) {
    if (!(tail_target > 0.0)) throw ParameterOutOfRange("tail_target must be positive");
    // Calibrate K at a bulk frequency; the alias tail depends only weakly on x.
    const double x_cal = 1.0;
    const AliasTerms t = build_terms(model, kind, x_cal);
    int K = 32;
    while (tail_residual(t, x_cal, K) > tail_target) {
        if (K >= (1 << 22))
            throw TailBoundUnavailable("aliasing tail bound not reachable at feasible K");
        K *= 2;
    }
    AliasedDensity out{model, kind, K, tail_residual(t, x_cal, K)};
    return out;
}

namespace {

double deltaX_acvf(const SpectralDensityFn& f, int t, const QuadratureConfig& cfg) {
    return acvf_from_density(f, static_cast<double>(t), cfg);
}

}  // namespace

double deltaX_acvf_fou(const ProcessModel& fou, int t, const QuadratureConfig& cfg) {
    if (!fou.is_fou()) throw ParameterOutOfRange("deltaX_acvf_fou requires an fOU model");
    const Fou p = fou.as_fou();
    const double C = fou_spec_constant(p);
    SpectralDensityFn f;
    f.origin_exponent = p.d;
    f.tail_order = static_cast<int>(std::floor(2.0 * p.d + 4.0 - 1e-9));
    f.evaluator = [C, p](double x) {
        if (x == 0.0) {
            if (p.d < 0.0) return 0.0;
            if (p.d == 0.0) return C / (p.zeta * p.zeta);
            return std::numeric_limits<double>::infinity();
        }
        return C * window_sq(x) / (p.zeta * p.zeta + x * x) * std::pow(std::abs(x), -2.0 * p.d);
    };
    f.smooth_tail = [C, p](double x) {
        return C / ((p.zeta * p.zeta + x * x) * x * x) * std::pow(std::abs(x), -2.0 * p.d);
    };
    return deltaX_acvf(f, t, cfg);
}

double deltaX_acvf_fgle(const ProcessModel& fgle, int t, const QuadratureConfig& cfg) {
    if (!fgle.is_fgle()) throw ParameterOutOfRange("deltaX_acvf_fgle requires an fGLE model");
    const Fgle p = fgle.as_fgle();
    const FgleConstants k = fgle_constants(p.zeta, p.m, p.d, p.thermal);
    const double c2 = k.c * k.c;
    SpectralDensityFn f;
    f.origin_exponent = -p.d;
    f.tail_order = static_cast<int>(std::floor(2.0 * p.d + 4.0 - 1e-9));
    f.evaluator = [c2, k, p](double x) {
        const double ax = std::abs(x);
        if (ax == 0.0) return 0.0;
        const double poly = k.gamma0 + k.gamma1 * std::pow(ax, k.beta) +
                            k.gamma2 * std::pow(ax, 2.0 * k.beta);
        return c2 * window_sq(x) * std::pow(ax, 2.0 * p.d) / poly;
    };
    f.smooth_tail = [c2, k, p](double x) {
        const double ax = std::abs(x);
        const double poly = k.gamma0 + k.gamma1 * std::pow(ax, k.beta) +
                            k.gamma2 * std::pow(ax, 2.0 * k.beta);
        return c2 * std::pow(ax, 2.0 * p.d - 2.0) / poly;
    };
    return deltaX_acvf(f, t, cfg);
}

double velocity_acvf_for_init(const ProcessModel& model, Smoothing smoothing, int lag,
                              const QuadratureConfig& cfg, int vanishing_moments,
                              double upsilon) {
    (void)vanishing_moments;
    const DiscretizationFilter g0 = make_discretization_filter(model, 0, smoothing, upsilon);
    auto density = [&](double x) {
        const double m = g0(x);
        return m * m;
    };
    const bool singular = delta_exponent(model) > 0.0;
    return time_filter_coeff_even(density, lag, cfg, singular);
}

}  // namespace adsim
