#include "adsim/inference.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <numeric>

#include "adsim/detail/fft.hpp"

namespace adsim {

namespace {

double sample_mean(const std::vector<double>& x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

}  // namespace

MethodSummary summarize(const std::string& name, const std::vector<double>& estimates) {
    if (estimates.size() < 2) throw ParameterOutOfRange("summarize needs >= 2 estimates");
    MethodSummary s;
    s.name = name;
    s.n = static_cast<int>(estimates.size());
    s.mean = sample_mean(estimates);
    double ss = 0.0;
    for (double v : estimates) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (s.n - 1));
    return s;
}

double yule_walker_ar1(const std::vector<double>& path) {
    const std::size_t n = path.size();
    if (n < 2) throw ParameterOutOfRange("yule_walker_ar1 needs length >= 2");
    const double mu = sample_mean(path);
    double r0 = 0.0, r1 = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double c = path[t] - mu;
        r0 += c * c;
        if (t + 1 < n) r1 += c * (path[t + 1] - mu);
    }
    if (r0 == 0.0) throw DegenerateVariance("yule_walker_ar1: zero sample variance");
    return r1 / r0;
}

std::vector<double> periodogram(const std::vector<double>& path) {
    const std::size_t n = path.size();
    if (n < 4) throw ParameterOutOfRange("periodogram needs length >= 4");
    const double mu = sample_mean(path);
    std::vector<std::complex<double>> a(path.size());
    for (std::size_t t = 0; t < n; ++t) a[t] = path[t] - mu;
    const std::size_t half = n / 2;
    std::vector<double> out(half);
    if (detail::is_pow2(n)) {
        detail::fft_pow2(a, -1);
        for (std::size_t k = 1; k <= half; ++k)
            out[k - 1] = std::norm(a[k]) / (2.0 * M_PI * static_cast<double>(n));
    } else {
        for (std::size_t k = 1; k <= half; ++k) {
            std::complex<double> acc{0.0, 0.0};
            const double w = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
            for (std::size_t t = 0; t < n; ++t)
                acc += a[t] * std::exp(std::complex<double>(0.0, w * static_cast<double>(t)));
            out[k - 1] = std::norm(acc) / (2.0 * M_PI * static_cast<double>(n));
        }
    }
    return out;
}

LocalWhittleResult local_whittle(const std::vector<double>& path, int m) {
    const int n = static_cast<int>(path.size());
    if (m <= 1 || m >= n / 2) throw ParameterOutOfRange("local_whittle needs 1 < m < n/2");
    const std::vector<double> I = periodogram(path);
    std::vector<double> lam(m), logl(m);
    double mean_logl = 0.0;
    for (int k = 1; k <= m; ++k) {
        lam[k - 1] = 2.0 * M_PI * k / static_cast<double>(n);
        logl[k - 1] = std::log(lam[k - 1]);
        mean_logl += logl[k - 1];
    }
    mean_logl /= m;
    auto R = [&](double d) {
        double acc = 0.0;
        for (int k = 0; k < m; ++k) acc += std::exp(2.0 * d * logl[k]) * I[k];
        return std::log(acc / m) - 2.0 * d * mean_logl;
    };

    double a = -0.49, b = 0.49;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double e = a + gr * (b - a);
    double fc = R(c), fe = R(e);
    while (b - a > 1e-6) {
        if (fc < fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - gr * (b - a);
            fc = R(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + gr * (b - a);
            fe = R(e);
        }
    }
    LocalWhittleResult res;
    res.d_hat = 0.5 * (a + b);
    res.at_boundary = res.d_hat > 0.49 - 1e-4 || res.d_hat < -0.49 + 1e-4;
    return res;
}

double spectral_gof(const std::vector<double>& path,
                    const std::function<double(double)>& f_model) {
    const int n = static_cast<int>(path.size());
    if (n < 64) throw ParameterOutOfRange("spectral_gof needs length >= 64");
    const std::vector<double> I = periodogram(path);
    const int M = n / 2 - 1;  // interior Fourier frequencies, Nyquist excluded
    double acc = 0.0;
    for (int k = 1; k <= M; ++k) {
        const double lam = 2.0 * M_PI * k / static_cast<double>(n);
        const double f = f_model(lam);
        if (!(f > 0.0) || !std::isfinite(f))
            throw ModelDensityZero("spectral_gof: model density not positive at a frequency");
        // E I(lambda) ~ f(lambda) / (2 pi) under the acvf = (1/2pi) int e f convention
        acc += 2.0 * M_PI * I[k - 1] / f;
    }
    return (acc - M) / std::sqrt(static_cast<double>(M));
}

double two_sample_t(const MethodSummary& a, const MethodSummary& b) {
    if (a.n < 2 || b.n < 2) throw ParameterOutOfRange("two_sample_t needs n >= 2");
    const double se =
        std::sqrt(a.sd * a.sd / a.n + b.sd * b.sd / b.n);
    if (se == 0.0) return a.mean == b.mean ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(a.mean - b.mean) / se;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 20 || b.size() < 20)
        throw ParameterOutOfRange("ks_two_sample needs sizes >= 20");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t na = a.size(), nb = b.size();
    std::size_t ia = 0, ib = 0;
    double d = 0.0;
    while (ia < na && ib < nb) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < na && a[ia] <= x) ++ia;
        while (ib < nb && b[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }
    KsResult res;
    res.d = d;
    const double ne = static_cast<double>(na) * nb / static_cast<double>(na + nb);
    const double sq = std::sqrt(ne);
    const double lam = (sq + 0.12 + 0.11 / sq) * d;
    double p = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = sign * std::exp(-2.0 * j * j * lam * lam);
        p += term;
        sign = -sign;
        if (std::abs(term) < 1e-12) break;
    }
    res.p = std::clamp(2.0 * p, 0.0, 1.0);
    return res;
}

}  // namespace adsim
