#include "adsim/models.hpp"

#include <cmath>
#include <limits>

namespace adsim {

namespace {

// sigma * sqrt(Gamma(2d+2) sin(pi (d+1/2))) -- the fOU/OU spectral constant.
double fou_constant(double sigma, double d) {
    return sigma * std::sqrt(std::tgamma(2.0 * d + 2.0) * std::sin(M_PI * (d + 0.5)));
}

}  // namespace

ProcessModel ProcessModel::ou(double zeta, double sigma) {
    if (!(zeta > 0.0) || !(sigma > 0.0))
        throw ParameterOutOfRange("OU requires zeta > 0 and sigma > 0");
    return ProcessModel(Ou{zeta, sigma});
}

ProcessModel ProcessModel::fou(double zeta, double sigma, double d) {
    if (!(zeta > 0.0) || !(sigma > 0.0))
        throw ParameterOutOfRange("fOU requires zeta > 0 and sigma > 0");
    if (!(d > -0.5 && d < 0.5))
        throw ParameterOutOfRange("fOU requires d in (-1/2, 1/2)");
    return ProcessModel(Fou{zeta, sigma, d});
}

ProcessModel ProcessModel::fgle(double zeta, double m, double d, double thermal) {
    if (!(zeta > 0.0) || !(m > 0.0) || !(thermal > 0.0))
        throw ParameterOutOfRange("fGLE requires zeta, m, thermal > 0");
    if (!(d > 0.0 && d < 0.5))
        throw ParameterOutOfRange("fGLE requires d in (0, 1/2)");
    return ProcessModel(Fgle{zeta, m, d, thermal});
}

FgleConstants fgle_constants(double zeta, double m, double d, double thermal) {
    if (!(zeta > 0.0) || !(m > 0.0) || !(thermal > 0.0))
        throw ParameterOutOfRange("fGLE requires zeta, m, thermal > 0");
    if (!(d > 0.0 && d < 0.5))
        throw ParameterOutOfRange("fGLE requires d in (0, 1/2)");
    FgleConstants k{};
    const double gam = std::tgamma(2.0 * d + 2.0);
    k.a = zeta * gam * std::sin(M_PI * (d + 0.5));
    k.b = zeta * gam * std::cos(M_PI * (d + 0.5));
    k.gamma0 = k.a * k.a + k.b * k.b;
    k.gamma1 = 2.0 * k.b * m;
    k.gamma2 = m * m;
    k.beta = 1.0 + 2.0 * d;
    k.c = std::sqrt(2.0 * zeta * thermal * gam * std::sin(M_PI * (d + 0.5)));
    return k;
}

double delta_exponent(const ProcessModel& model) {
    if (model.is_fou()) return model.as_fou().d;
    if (model.is_fgle()) return -model.as_fgle().d;
    return 0.0;
}

double eval_ghat(const ProcessModel& model, double x, bool allow_singular) {
    if (!std::isfinite(x)) throw ParameterOutOfRange("eval_ghat: non-finite frequency");
    const double ax = std::abs(x);
    if (model.is_ou()) {
        const auto& p = model.as_ou();
        return p.sigma / std::sqrt(p.zeta * p.zeta + x * x);
    }
    if (model.is_fou()) {
        const auto& p = model.as_fou();
        if (ax == 0.0 && p.d > 0.0) {
            if (!allow_singular)
                throw SingularityAtOrigin("fOU spectral filter diverges at x = 0 for d > 0");
            return std::numeric_limits<double>::infinity();
        }
        const double base = fou_constant(p.sigma, p.d) / std::sqrt(p.zeta * p.zeta + x * x);
        return base * std::pow(ax, -p.d);
    }
    const auto& p = model.as_fgle();
    const FgleConstants k = fgle_constants(p.zeta, p.m, p.d, p.thermal);
    const double denom = k.gamma0 + k.gamma1 * std::pow(ax, k.beta) +
                         k.gamma2 * std::pow(ax, 2.0 * k.beta);
    return k.c * std::pow(ax, p.d) / std::sqrt(denom);
}

SpectralDensityFn spectral_density(const ProcessModel& model) {
    SpectralDensityFn f;
    f.origin_exponent = delta_exponent(model);
    f.tail_order = 2;
    f.evaluator = [model](double x) {
        const double g = eval_ghat(model, x, /*allow_singular=*/true);
        return g * g;
    };
    return f;
}

}  // namespace adsim
