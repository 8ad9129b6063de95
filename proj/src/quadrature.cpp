#include "adsim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace adsim {

namespace {

struct Panel {
    double a, b;
    double value;
    double err;
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

// 15-point Gauss-Kronrod rule with embedded 7-point Gauss estimate.
const double kGk15Nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
const double kGk15Weights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
const double kG7Weights[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

Panel gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double m = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double y0 = f(m);
    if (!std::isfinite(y0)) throw NonFiniteIntegrand("non-finite integrand value");
    double k15 = kGk15Weights[0] * y0;
    double g7 = kG7Weights[0] * y0;
    evals += 1;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGk15Nodes[i];
        const double yl = f(m - dx);
        const double yr = f(m + dx);
        if (!std::isfinite(yl) || !std::isfinite(yr))
            throw NonFiniteIntegrand("non-finite integrand value");
        k15 += kGk15Weights[i] * (yl + yr);
        if (i % 2 == 0) g7 += kG7Weights[i / 2] * (yl + yr);
        evals += 2;
    }
    k15 *= h;
    g7 *= h;
    return Panel{a, b, k15, std::abs(k15 - g7)};
}

// 7-point Kronrod extension of the 4-point Gauss-Lobatto rule (adaptive
// Lobatto in the Gander-Gautschi formulation).
Panel lobatto7(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double m = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double alpha = std::sqrt(2.0 / 3.0);
    const double beta = 1.0 / std::sqrt(5.0);
    const double y[7] = {f(a),           f(m - alpha * h), f(m - beta * h), f(m),
                         f(m + beta * h), f(m + alpha * h), f(b)};
    evals += 7;
    for (double v : y)
        if (!std::isfinite(v)) throw NonFiniteIntegrand("non-finite integrand value");
    const double i2 = (h / 6.0) * (y[0] + y[6] + 5.0 * (y[2] + y[4]));
    const double i1 = (h / 1470.0) * (77.0 * (y[0] + y[6]) + 432.0 * (y[1] + y[5]) +
                                      625.0 * (y[2] + y[4]) + 672.0 * y[3]);
    return Panel{a, b, i1, std::abs(i1 - i2)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
    if (!(a < b)) throw ParameterOutOfRange("integrate: requires a < b");
    auto rule = (cfg.method == QuadMethod::Lobatto) ? lobatto7 : gk15;

    // Seed panels: one per subinterval between declared breakpoints.
    std::vector<double> cuts{a};
    std::vector<double> bps = cfg.breakpoints;
    std::sort(bps.begin(), bps.end());
    for (double p : bps)
        if (p > a && p < b) cuts.push_back(p);
    cuts.push_back(b);

    QuadResult out;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    double total = 0.0, toterr = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = rule(f, cuts[i], cuts[i + 1], out.evaluations);
        total += p.value;
        toterr += p.err;
        heap.push(p);
    }

    const double span = b - a;
    const double min_width = span * 1e-15;
    int splits = 0;
    while (toterr > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        Panel worst = heap.top();
        if (worst.b - worst.a <= min_width) break;  // resolution floor
        heap.pop();
        if (++splits > cfg.max_subdivisions)
            throw MaxSubdivisionsExceeded("integrate: subdivision limit reached");
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = rule(f, worst.a, mid, out.evaluations);
        Panel right = rule(f, mid, worst.b, out.evaluations);
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    out.value = total;
    out.error_estimate = toterr;
    return out;
}

double time_filter_coeff(const std::function<std::complex<double>(double)>& fhat, int k,
                         const QuadratureConfig& cfg, bool singular_at_origin) {
    auto integrand = [&fhat, k](double x) {
        return std::real(std::exp(std::complex<double>(0.0, k * x)) * fhat(x));
    };
    double acc = 0.0;
    if (singular_at_origin && cfg.rho > 0.0) {
        acc += integrate(integrand, -M_PI, -cfg.rho, cfg).value;
        acc += integrate(integrand, cfg.rho, M_PI, cfg).value;
    } else {
        QuadratureConfig c = cfg;
        c.breakpoints.push_back(0.0);
        acc = integrate(integrand, -M_PI, M_PI, c).value;
    }
    return acc / (2.0 * M_PI);
}

double time_filter_coeff_even(const std::function<double(double)>& fhat, int k,
                              const QuadratureConfig& cfg, bool singular_at_origin) {
    auto integrand = [&fhat, k](double x) { return std::cos(k * x) * fhat(x); };
    const double lo = (singular_at_origin && cfg.rho > 0.0) ? cfg.rho : 0.0;
    return integrate(integrand, lo, M_PI, cfg).value / M_PI;
}

namespace {

// Local decay exponent of g near X from samples at X/2 and X.
double local_exponent(const std::function<double(double)>& g, double X, double fallback) {
    const double a = g(0.5 * X), b = g(X);
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) return fallback;
    const double p = std::log(a / b) / std::log(2.0);
    return (std::isfinite(p) && p > 1.01) ? p : fallback;
}

// int_X^inf cos(sx) g(x) dx for smooth g ~ C x^{-p}: exact for the power law
// when s = 0, two terms of integration by parts otherwise.
double tail_cos_integral(const std::function<double(double)>& g, double X, double s,
                         double p) {
    const double gX = g(X);
    if (!(gX > 0.0) || !std::isfinite(gX)) return 0.0;
    const double as = std::abs(s);
    if (as < 1e-12) return gX * X / (p - 1.0);
    return -gX * std::sin(as * X) / as + p * gX * std::cos(as * X) / (X * as * as);
}

}  // namespace

double acvf_from_density(const SpectralDensityFn& f, double t, const QuadratureConfig& cfg,
                         double cutoff) {
    const double at = std::abs(t);
    auto integrand = [&f, t](double x) { return std::cos(t * x) * f.evaluator(x); };
    const bool singular = f.origin_exponent > 0.0;
    const double lo = singular ? cfg.rho : 0.0;

    double patch = 0.0;
    if (singular && cfg.rho > 0.0) {
        // Power-law patch over the excluded ball: f ~ C0 x^{-2 delta}, cos(tx) ~ 1.
        const double twod = 2.0 * f.origin_exponent;
        const double c0 = f.evaluator(cfg.rho) * std::pow(cfg.rho, twod);
        patch = c0 * std::pow(cfg.rho, 1.0 - twod) / (1.0 - twod);
    }

    if (cutoff > 0.0) {
        QuadratureConfig c = cfg;
        for (double bp : {1.0, cutoff / 64.0, cutoff / 8.0}) c.breakpoints.push_back(bp);
        return (integrate(integrand, lo, cutoff, c).value + patch) / M_PI;
    }
    if (f.tail_order < 2)
        throw TailBoundUnavailable("acvf_from_density: tail_order < 2 and no cutoff");

    // The window 2 - 2 cos x = 2 - e^{ix} - e^{-ix} splits cos(tx) f into the
    // frequencies t, t - 1, t + 1 against the smooth part.
    const bool windowed = static_cast<bool>(f.smooth_tail);
    const std::function<double(double)>& g = windowed ? f.smooth_tail : f.evaluator;
    const double p_fallback = f.tail_order + (windowed ? 2.0 : 0.0);
    auto tail_at = [&](double X) {
        const double p = local_exponent(g, X, p_fallback);
        if (!windowed) return tail_cos_integral(g, X, at, p);
        return 2.0 * tail_cos_integral(g, X, at, p) -
               tail_cos_integral(g, X, at - 1.0, p) -
               tail_cos_integral(g, X, at + 1.0, p);
    };

    // Grow the numeric range until the tail-corrected value stabilises.
    double X = 64.0;
    QuadratureConfig c0 = cfg;
    for (double bp : {1.0, 8.0}) c0.breakpoints.push_back(bp);
    double acc = integrate(integrand, lo, X, c0).value;
    double prev = acc + tail_at(X) + patch;
    for (int step = 0; step < 14; ++step) {
        acc += integrate(integrand, X, 2.0 * X, cfg).value;
        X *= 2.0;
        const double cur = acc + tail_at(X) + patch;
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur));
        if (std::abs(cur - prev) <= tol) return cur / M_PI;
        prev = cur;
    }
    return prev / M_PI;
}

}  // namespace adsim
