#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "adsim/errors.hpp"

namespace adsim {

/// Replicate summary of one simulation method for an estimator.
struct MethodSummary {
    std::string name;
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation
    int n = 0;
};

MethodSummary summarize(const std::string& name, const std::vector<double>& estimates);

/// phi_hat = r(1)/r(0) with biased (1/n) acvf estimates, mean removed.
double yule_walker_ar1(const std::vector<double>& path);

/// I(lambda_k) = |sum_t x_t e^{-it lambda_k}|^2 / (2 pi n) at lambda_k =
/// 2 pi k / n, k = 1..floor(n/2); mean removed.  Entry [k-1] holds k.
std::vector<double> periodogram(const std::vector<double>& path);

struct LocalWhittleResult {
    double d_hat = 0.0;
    bool at_boundary = false;
};

inline int default_lw_bandwidth(int n) {
    return static_cast<int>(std::pow(static_cast<double>(n), 0.65));
}

/// Semiparametric Local Whittle estimate of the memory parameter, minimized
/// by golden-section search on [-0.49, 0.49] to tolerance 1e-6.
LocalWhittleResult local_whittle(const std::vector<double>& path, int m);

/// Standardized spectral goodness-of-fit statistic from periodogram/model
/// ratios at the interior Fourier frequencies; asymptotically N(0,1) under
/// the null.  f_model follows the acvf(t) = (1/2pi) int e^{itx} f convention.
double spectral_gof(const std::vector<double>& path,
                    const std::function<double(double)>& f_model);

/// Welch statistic |mean_A - mean_B| / sqrt(s_A^2/N_A + s_B^2/N_B).
double two_sample_t(const MethodSummary& a, const MethodSummary& b);

struct KsResult {
    double d = 0.0;
    double p = 1.0;
};

/// Two-sample Kolmogorov-Smirnov with the asymptotic p-value series.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace adsim
