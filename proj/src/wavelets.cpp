#include "adsim/wavelets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adsim {

namespace {

// Daubechies extremal-phase scaling coefficients, sum = sqrt(2).
const std::vector<double> kDb1 = {0.7071067811865476, 0.7071067811865476};
const std::vector<double> kDb2 = {0.48296291314469025, 0.836516303737469,
                                  0.22414386804185735, -0.12940952255092145};
const std::vector<double> kDb4 = {0.23037781330885523, 0.7148465705525415,
                                  0.6308807679295904,  -0.02798376941698385,
                                  -0.18703481171888114, 0.030841381835986965,
                                  0.032883011666982945, -0.010597401784997278};
const std::vector<double> kDb8 = {
    0.05441584224308161,    0.3128715909144659,    0.6756307362980128,
    0.5853546836548691,     -0.015829105256023893, -0.2840155429624281,
    0.00047248457399797254, 0.128747426620186,     -0.01736930100202211,
    -0.04408825393106472,   0.013981027917015516,  0.008746094047015655,
    -0.00487035299301066,   -0.0003917403729959771, 0.0006754494059985568,
    -0.00011747678400228192};

// Component filters: the zeta, fractional-power, and gamma-polynomial pieces
// of ghat_j, evaluated at a folded argument xp in [-pi, pi).

double comp_zeta(double zeta, int j, double xp, Smoothing s, double upsilon) {
    const double two_j = std::ldexp(1.0, j);
    if (s == Smoothing::Truncated)
        return 1.0 / std::sqrt(zeta * zeta + two_j * two_j * xp * xp);
    const double xs = smoothing_xstar(zeta, upsilon, j);
    const double y = xs * xp / M_PI;
    return std::exp(upsilon * y * y / (2.0 * M_PI * M_PI)) /
           std::sqrt(zeta * zeta + two_j * two_j * y * y);
}

double comp_power(double delta, int j, double xp, Smoothing s) {
    if (delta == 0.0) return 1.0;
    double v = std::pow(2.0, -j * delta) * std::pow(std::abs(xp), -delta);
    if (s == Smoothing::Smoothed) v *= std::exp(delta * xp * xp / (2.0 * M_PI * M_PI));
    return v;
}

double gamma_poly(const FgleConstants& k, double y) {
    return k.gamma0 + k.gamma1 * std::pow(y, k.beta) + k.gamma2 * std::pow(y, 2.0 * k.beta);
}

double comp_gamma(const FgleConstants& k, int j, double xp, Smoothing s) {
    const double y = std::ldexp(std::abs(xp), j);
    double v = 1.0 / std::sqrt(gamma_poly(k, y));
    if (s == Smoothing::Smoothed) v *= std::exp(k.beta * xp * xp / (2.0 * M_PI * M_PI));
    return v;
}

double model_zeta(const ProcessModel& m) {
    if (m.is_ou()) return m.as_ou().zeta;
    if (m.is_fou()) return m.as_fou().zeta;
    return m.as_fgle().zeta;
}

double model_constant(const ProcessModel& m) {
    if (m.is_ou()) return m.as_ou().sigma;
    if (m.is_fou()) {
        const auto& p = m.as_fou();
        return p.sigma * std::sqrt(std::tgamma(2.0 * p.d + 2.0) * std::sin(M_PI * (p.d + 0.5)));
    }
    const auto& p = m.as_fgle();
    return fgle_constants(p.zeta, p.m, p.d, p.thermal).c;
}

}  // namespace

CmfPair daubechies_cmf(int vanishing_moments) {
    const std::vector<double>* h = nullptr;
    switch (vanishing_moments) {
        case 1: h = &kDb1; break;
        case 2: h = &kDb2; break;
        case 4: h = &kDb4; break;
        case 8: h = &kDb8; break;
        default:
            throw UnsupportedOrder("daubechies_cmf: supported orders are 1, 2, 4, 8");
    }
    CmfPair out;
    out.h = *h;
    out.vanishing_moments = vanishing_moments;
    const size_t L = h->size();
    out.g.resize(L);
    for (size_t k = 0; k < L; ++k)
        out.g[k] = ((k % 2 == 0) ? 1.0 : -1.0) * (*h)[L - 1 - k];
    return out;
}

std::complex<double> cmf_transfer(const std::vector<double>& coeffs, double x) {
    std::complex<double> acc{0.0, 0.0};
    for (size_t k = 0; k < coeffs.size(); ++k)
        acc += coeffs[k] * std::exp(std::complex<double>(0.0, -static_cast<double>(k) * x));
    return acc;
}

double smoothing_xstar(double zeta, double upsilon, int j) {
    const double arg = M_PI * M_PI / upsilon - zeta * zeta / std::ldexp(1.0, 2 * j);
    if (!(arg > 0.0))
        throw ParameterOutOfRange("smoothing: pi^2/upsilon must exceed zeta^2/2^{2j}");
    return std::sqrt(arg);
}

double DiscretizationFilter::operator()(double x) const {
    const double xp = fold_2pi(x);
    const double c = model_constant(model);
    if (model.is_ou()) return c * comp_zeta(model_zeta(model), j, xp, smoothing, upsilon);
    if (model.is_fou()) {
        const auto& p = model.as_fou();
        return c * comp_zeta(p.zeta, j, xp, smoothing, upsilon) *
               comp_power(p.d, j, xp, smoothing);
    }
    const auto& p = model.as_fgle();
    const FgleConstants k = fgle_constants(p.zeta, p.m, p.d, p.thermal);
    return c * comp_power(-p.d, j, xp, smoothing) * comp_gamma(k, j, xp, smoothing);
}

DiscretizationFilter make_discretization_filter(const ProcessModel& model, int j,
                                                Smoothing smoothing, double upsilon) {
    if (j < 0) throw ParameterOutOfRange("discretization filter requires j >= 0");
    if (!(upsilon > 0.0)) throw ParameterOutOfRange("smoothing parameter must be positive");
    if (smoothing == Smoothing::Smoothed && !model.is_fgle())
        smoothing_xstar(model_zeta(model), upsilon, j);  // validates x*(j) real
    return DiscretizationFilter{model, j, smoothing, upsilon};
}

double eval_Gj(const ProcessModel& model, int j, double x, GjVariant variant) {
    if (j < 0) throw ParameterOutOfRange("eval_Gj requires j >= 0");
    if (std::abs(x) > 4.0 * M_PI / 3.0 + 1e-12)
        throw ParameterOutOfRange("eval_Gj: |x| must be <= 4pi/3");
    const double xp = fold_2pi(x);
    switch (variant) {
        case GjVariant::Zeta: {
            const double z = model_zeta(model);
            const double s = std::ldexp(1.0, 2 * j);
            return std::sqrt((z * z + s * x * x) / (z * z + s * xp * xp));
        }
        case GjVariant::Power: {
            const double delta = delta_exponent(model);
            if (x == 0.0 || delta == 0.0) return 1.0;
            return std::pow(std::abs(xp) / std::abs(x), -delta);
        }
        case GjVariant::GammaD: {
            if (!model.is_fgle())
                throw ParameterOutOfRange("GammaD diagnostic requires an fGLE model");
            const auto& p = model.as_fgle();
            const FgleConstants k = fgle_constants(p.zeta, p.m, p.d, p.thermal);
            const double y_cont = std::ldexp(std::abs(x), j);
            const double y_disc = std::ldexp(std::abs(xp), j);
            return std::sqrt(gamma_poly(k, y_cont) / gamma_poly(k, y_disc));
        }
        case GjVariant::ExactOu: {
            const double z = model_zeta(model);
            const double h = std::ldexp(1.0, -j);
            if (x == 0.0) return h * z / (1.0 - std::exp(-z * h));
            const std::complex<double> num = h * std::complex<double>(z, x / h);
            const std::complex<double> den =
                1.0 - std::exp(-z * h) * std::exp(std::complex<double>(0.0, -x));
            return std::abs(num / den);
        }
    }
    throw ParameterOutOfRange("eval_Gj: unknown variant");
}

double assumption5_diagnostic(const ProcessModel& model, GjVariant variant, int j_lo, int j_hi) {
    if (j_lo < 0 || j_hi < j_lo) throw ParameterOutOfRange("assumption5_diagnostic: bad j range");
    double worst = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double dev = std::abs(eval_Gj(model, j, 0.0, variant) - 1.0);
        worst = std::max(worst, dev * std::ldexp(1.0, j));
    }
    return worst;
}

namespace {

// (1/2pi) int Re(e^{ikx} fhat(x)) dx over [-pi, pi], optionally excluding
// rho-balls around the origin and around +-pi, with panel breakpoints at the
// branch kinks of the low-pass ratio.
double fourier_coeff(const std::function<std::complex<double>(double)>& fhat, int k,
                     const QuadratureConfig& cfg, bool excl_origin, bool excl_pi) {
    auto integrand = [&fhat, k](double x) {
        return std::real(std::exp(std::complex<double>(0.0, k * x)) * fhat(x));
    };
    const double rho = cfg.rho;
    const double lo = excl_pi ? -M_PI + rho : -M_PI;
    const double hi = excl_pi ? M_PI - rho : M_PI;
    QuadratureConfig c = cfg;
    c.breakpoints.insert(c.breakpoints.end(), {-M_PI / 2.0, 0.0, M_PI / 2.0});
    double acc = 0.0;
    if (excl_origin && rho > 0.0) {
        acc += integrate(integrand, lo, -rho, c).value;
        acc += integrate(integrand, rho, hi, c).value;
    } else {
        acc = integrate(integrand, lo, hi, c).value;
    }
    return acc / (2.0 * M_PI);
}

ScaleFilters filters_from_factors(const std::function<double(double)>& ratio,
                                 const std::function<double(double)>& gj1, int j,
                                 const CmfPair& cmf, const QuadratureConfig& cfg,
                                 const TruncationPolicy& policy, bool u_excl_pi,
                                 bool v_excl_origin) {
    if (policy.max_lag < 1) throw ParameterOutOfRange("truncation policy: max_lag must be >= 1");
    const int T = policy.max_lag;
    auto uhat_j = [&](double x) { return ratio(x) * cmf_transfer(cmf.h, x); };
    auto vhat_j = [&](double x) { return gj1(x) * cmf_transfer(cmf.g, x); };

    std::vector<double> u(2 * T + 1), v(2 * T + 1);
    for (int k = -T; k <= T; ++k) {
        u[T + k] = fourier_coeff(uhat_j, k, cfg, false, u_excl_pi);
        v[T + k] = fourier_coeff(vhat_j, k, cfg, v_excl_origin, false);
    }

    // Trim to the first lag beyond which every entry falls below the threshold.
    int keep = T;
    if (policy.threshold > 0.0) {
        keep = 1;
        for (int k = T; k >= 1; --k) {
            if (std::abs(u[T + k]) >= policy.threshold || std::abs(u[T - k]) >= policy.threshold ||
                std::abs(v[T + k]) >= policy.threshold || std::abs(v[T - k]) >= policy.threshold) {
                keep = k;
                break;
            }
        }
    }

    ScaleFilters out;
    out.j = j;
    out.trunc_lag = keep;
    out.trunc_threshold = policy.threshold;
    out.u.assign(u.begin() + (T - keep), u.begin() + (T + keep) + 1);
    out.v.assign(v.begin() + (T - keep), v.begin() + (T + keep) + 1);
    out.max_tail_value = std::max(std::max(std::abs(out.u.front()), std::abs(out.u.back())),
                                  std::max(std::abs(out.v.front()), std::abs(out.v.back())));
    return out;
}

}  // namespace

ScaleFilters build_scale_filters(const ProcessModel& model, int j, const CmfPair& cmf,
                                 Smoothing smoothing, const QuadratureConfig& cfg,
                                 const TruncationPolicy& policy, double upsilon) {
    const DiscretizationFilter gj1 = make_discretization_filter(model, j + 1, smoothing, upsilon);
    if (smoothing == Smoothing::Smoothed && !model.is_fgle())
        smoothing_xstar(model_zeta(model), upsilon, j);  // ratio also evaluates scale j
    const double delta = delta_exponent(model);
    const double zeta = model_zeta(model);
    const bool has_zeta = !model.is_fgle();
    const bool has_gamma = model.is_fgle();
    FgleConstants kg{};
    if (has_gamma) {
        const auto& p = model.as_fgle();
        kg = fgle_constants(p.zeta, p.m, p.d, p.thermal);
    }

    // ghat_{j+1}(x) / ghat_j(2x): model constants cancel; the fractional-power
    // factor is reduced analytically so the |x|^{-delta} singularities at the
    // origin never appear (the ratio is exactly 1 there for |x| <= pi/2).
    auto ratio = [=](double x) {
        const double xp = fold_2pi(x);
        const double x2p = fold_2pi(2.0 * x);
        double r = 1.0;
        if (has_zeta)
            r *= comp_zeta(zeta, j + 1, xp, smoothing, upsilon) /
                 comp_zeta(zeta, j, x2p, smoothing, upsilon);
        if (delta != 0.0) {
            if (std::abs(x) > M_PI / 2.0)
                r *= std::pow(2.0, -delta) * std::pow(std::abs(xp) / std::abs(x2p), -delta);
            if (smoothing == Smoothing::Smoothed)
                r *= std::exp(delta * (xp * xp - x2p * x2p) / (2.0 * M_PI * M_PI));
        }
        if (has_gamma)
            r *= comp_gamma(kg, j + 1, xp, smoothing) / comp_gamma(kg, j, x2p, smoothing);
        return r;
    };
    auto gj1_fn = [gj1](double x) { return gj1(x); };

    // fGLE: the low-pass ratio blows up like |x -+ pi|^{-d} at the band edge;
    // fOU: ghat_{j+1} blows up like |x|^{-d} at the origin.  Both are paired
    // with an N-th order CMF zero, but the quadrature nodes must not land on
    // the non-finite point itself.
    return filters_from_factors(ratio, gj1_fn, j, cmf, cfg, policy,
                                /*u_excl_pi=*/delta < 0.0, /*v_excl_origin=*/delta > 0.0);
}

ScaleFilters build_scale_filters_from_spectra(const std::function<double(double)>& ratio,
                                              const std::function<double(double)>& gj1,
                                              int j, const CmfPair& cmf,
                                              const QuadratureConfig& cfg,
                                              const TruncationPolicy& policy,
                                              bool gj1_singular_at_origin) {
    return filters_from_factors(ratio, gj1, j, cmf, cfg, policy, false, gj1_singular_at_origin);
}

std::vector<double> g0_time_filter(const ProcessModel& model, const CmfPair& cmf,
                                   Smoothing smoothing, int T0, const QuadratureConfig& cfg,
                                   double upsilon) {
    if (T0 < 1) throw ParameterOutOfRange("g0_time_filter requires T0 >= 1");
    (void)cmf;
    const DiscretizationFilter g0 = make_discretization_filter(model, 0, smoothing, upsilon);
    auto modulus = [&](double x) { return g0(x); };
    const bool singular = delta_exponent(model) > 0.0;
    std::vector<double> out(2 * T0 + 1);
    for (int k = 0; k <= T0; ++k) {
        const double c = time_filter_coeff_even(modulus, k, cfg, singular);
        out[T0 + k] = c;
        out[T0 - k] = c;
    }
    return out;
}

}  // namespace adsim
