#pragma once

#include <functional>
#include <variant>

#include "adsim/errors.hpp"

namespace adsim {

/// Ornstein-Uhlenbeck velocity process dV = -zeta V dt + sigma dB.
struct Ou {
    double zeta;
    double sigma;
};

/// Fractional OU: fBm-driven Langevin equation, d = H - 1/2 in (-1/2, 1/2).
struct Fou {
    double zeta;
    double sigma;
    double d;
};

/// Fractional GLE velocity process with power-law memory kernel, d in (0, 1/2).
/// `thermal` is the k_B * tau product entering c(d); only the product matters.
struct Fgle {
    double zeta;
    double m;
    double d;
    double thermal;
};

/// Constants of the fGLE spectral filter denominator
/// gamma0 + gamma1 |x|^beta + gamma2 |x|^{2 beta}, beta = 1 + 2d.
struct FgleConstants {
    double a;
    double b;
    double gamma0;
    double gamma1;
    double gamma2;
    double beta;
    double c;
};

class ProcessModel {
  public:
    static ProcessModel ou(double zeta, double sigma);
    static ProcessModel fou(double zeta, double sigma, double d);
    static ProcessModel fgle(double zeta, double m, double d, double thermal = 1.0);

    bool is_ou() const { return std::holds_alternative<Ou>(v_); }
    bool is_fou() const { return std::holds_alternative<Fou>(v_); }
    bool is_fgle() const { return std::holds_alternative<Fgle>(v_); }

    const Ou& as_ou() const { return std::get<Ou>(v_); }
    const Fou& as_fou() const { return std::get<Fou>(v_); }
    const Fgle& as_fgle() const { return std::get<Fgle>(v_); }

    const std::variant<Ou, Fou, Fgle>& value() const { return v_; }

  private:
    explicit ProcessModel(std::variant<Ou, Fou, Fgle> v) : v_(std::move(v)) {}
    std::variant<Ou, Fou, Fgle> v_;
};

FgleConstants fgle_constants(double zeta, double m, double d, double thermal = 1.0);

/// Fractional exponent delta of the spectral density at the origin:
/// |ghat(x)|^2 ~ x^{-2 delta}.  fOU: d, fGLE: -d, OU: 0.
double delta_exponent(const ProcessModel& model);

/// Continuous-time spectral filter ghat(x) >= 0, even in x.
/// For long-range-dependent models (delta > 0) the value at x = 0 is infinite;
/// by default this raises SingularityAtOrigin, or returns +inf when
/// `allow_singular` is set.
double eval_ghat(const ProcessModel& model, double x, bool allow_singular = false);

/// Evaluable nonnegative spectral density with origin/tail metadata.
struct SpectralDensityFn {
    std::function<double(double)> evaluator;
    double origin_exponent = 0.0;  // delta: f(x) ~ x^{-2 delta} near 0
    int tail_order = 2;            // f(x) = O(x^{-tail_order}) for large x
    // When set, evaluator(x) == (2 - 2 cos x) * smooth_tail(x) with smooth_tail
    // monotone power-law decaying; tail handling then splits the cosine window
    // into its constituent frequencies.
    std::function<double(double)> smooth_tail;
};

/// |ghat|^2 of the model as a SpectralDensityFn over the real line.
SpectralDensityFn spectral_density(const ProcessModel& model);

}  // namespace adsim
