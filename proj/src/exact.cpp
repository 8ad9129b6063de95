#include "adsim/exact.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "adsim/detail/fft.hpp"

namespace adsim {

AcvfTable make_acvf_table(std::vector<double> values, std::string source) {
    if (values.empty() || !(values[0] > 0.0))
        throw ParameterOutOfRange("acvf table requires r[0] > 0");
    for (double v : values)
        if (!std::isfinite(v) || std::abs(v) > values[0] * (1.0 + 1e-12))
            throw ParameterOutOfRange("acvf table requires |r[k]| <= r[0]");
    return AcvfTable{std::move(values), std::move(source)};
}

CholeskyFactor::CholeskyFactor(const AcvfTable& r, int n) : n_(n) {
    if (n < 1 || static_cast<std::size_t>(n) > r.values.size())
        throw ParameterOutOfRange("cholesky: need 1 <= n <= acvf length");
    l_.assign(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0);
    auto at = [this](int i, int j) -> double& {
        return l_[static_cast<std::size_t>(i) * (i + 1) / 2 + j];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = r.values[static_cast<std::size_t>(i - j)];
            for (int k = 0; k < j; ++k) s -= at(i, k) * at(j, k);
            if (i == j) {
                if (!(s > 0.0)) throw NotPositiveDefinite(i + 1);
                at(i, i) = std::sqrt(s);
            } else {
                at(i, j) = s / at(j, j);
            }
        }
    }
}

std::vector<double> CholeskyFactor::sample(GaussianRng& rng) const {
    std::vector<double> z(n_);
    for (double& v : z) v = rng.normal();
    std::vector<double> x(n_);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        const double* row = &l_[static_cast<std::size_t>(i) * (i + 1) / 2];
        for (int k = 0; k <= i; ++k) s += row[k] * z[k];
        x[i] = s;
    }
    return x;
}

std::vector<double> cholesky_simulate(const AcvfTable& r, int n, GaussianRng& rng) {
    return CholeskyFactor(r, n).sample(rng);
}

CmeSampler::CmeSampler(const AcvfTable& r, int n) : n_(n) {
    const std::size_t N = r.values.size();
    if (n < 1 || static_cast<std::size_t>(n) > N)
        throw ParameterOutOfRange("cme: need 1 <= n <= acvf length");
    std::size_t m = 1;
    while (m < 2 * (N - 1) || m < 2) m <<= 1;
    m_ = m;
    std::vector<std::complex<double>> row(m, 0.0);
    for (std::size_t k = 0; k < N; ++k) row[k] = r.values[k];
    for (std::size_t k = 1; k < N; ++k) row[m - k] = r.values[k];
    detail::fft_pow2(row, -1);

    double max_eig = 0.0;
    min_eig_ = row[0].real();
    for (const auto& e : row) {
        max_eig = std::max(max_eig, e.real());
        min_eig_ = std::min(min_eig_, e.real());
    }
    const double neg_tol = 1e-10 * max_eig;
    if (min_eig_ < -neg_tol)
        throw NegativeEigenvalue(min_eig_);
    sqrt_eig_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        double e = row[k].real();
        if (e < 0.0) {
            e = 0.0;
            clipped_ = true;
        }
        sqrt_eig_[k] = std::sqrt(e);
    }
}

std::vector<double> CmeSampler::sample(GaussianRng& rng) const {
    const std::size_t m = m_;
    std::vector<std::complex<double>> y(m);
    y[0] = sqrt_eig_[0] * rng.normal();
    y[m / 2] = sqrt_eig_[m / 2] * rng.normal();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 1; k < m / 2; ++k) {
        const double a = rng.normal();
        const double b = rng.normal();
        // lambda_{m-k} = lambda_k for a symmetric embedding row, so the
        // conjugate pairing keeps both the covariance and the realness exact.
        y[k] = sqrt_eig_[k] * inv_sqrt2 * std::complex<double>(a, b);
        y[m - k] = std::conj(y[k]);
    }
    detail::fft_pow2(y, +1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> x(n_);
    for (int j = 0; j < n_; ++j) x[j] = y[j].real() * scale;
    return x;
}

std::vector<double> cme_simulate(const AcvfTable& r, int n, GaussianRng& rng) {
    return CmeSampler(r, n).sample(rng);
}

std::vector<double> ar1_simulate(double phi, double innovation_sd, int n, GaussianRng& rng) {
    if (!(std::abs(phi) < 1.0)) throw NonStationary("ar1_simulate requires |phi| < 1");
    if (!(innovation_sd > 0.0)) throw ParameterOutOfRange("ar1_simulate requires sd > 0");
    if (n < 1) throw ParameterOutOfRange("ar1_simulate requires n >= 1");
    std::vector<double> x(n);
    x[0] = innovation_sd / std::sqrt(1.0 - phi * phi) * rng.normal();
    for (int t = 1; t < n; ++t) x[t] = phi * x[t - 1] + innovation_sd * rng.normal();
    return x;
}

}  // namespace adsim
