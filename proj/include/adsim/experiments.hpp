#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adsim/cascade.hpp"
#include "adsim/inference.hpp"

namespace adsim::experiments {

enum class ExactKind { Cholesky, Cme, Iterative };
enum class GofMethod { Cme, Cholesky, Wavelet };

struct MethodResult {
    MethodSummary summary;
    double abs_t = 0.0;  // vs the section baseline; 0 for the baseline itself
    bool baseline = false;
};

struct KsPair {
    std::string a, b;
    double d = 0.0, p = 0.0;
};

/// One table section: an estimator compared across methods against a baseline.
struct MCReport {
    std::string experiment;
    std::string estimator;
    std::string baseline;
    std::vector<MethodResult> methods;
    std::vector<KsPair> ks_pairs;  // gof experiment only
    double pooled_mean = 0.0;      // gof experiment only
    double pooled_sd = 0.0;
};

std::string report_to_json(const std::vector<MCReport>& reports);
std::string report_to_text(const std::vector<MCReport>& reports);

// --- replicate-sample generators (deterministic in (seed, replicate index)) ---

/// Yule-Walker phi estimates from wavelet OU paths sampled at spacing `spacing`
/// (spacing * 2^J must be a positive integer, n * spacing a positive integer).
std::vector<double> yw_ou_wavelet(double zeta, double spacing, int J, int n, int N,
                                  std::uint64_t seed,
                                  Smoothing smoothing = Smoothing::Smoothed);
std::vector<double> yw_ou_iterative(double zeta, double spacing, int n, int N,
                                    std::uint64_t seed);
std::vector<double> yw_ou_cme(double zeta, double spacing, int n, int N, std::uint64_t seed);

/// Local Whittle estimates for the fOU: velocity pipeline for d > 0, the
/// Delta X increment pipeline for d < 0 (matching the reference experiments).
std::vector<double> lw_fou_wavelet(double zeta, double d, int J, int n, int bw, int N,
                                   std::uint64_t seed,
                                   Smoothing smoothing = Smoothing::Smoothed);
std::vector<double> lw_fou_exact(ExactKind kind, double zeta, double d, int n, int bw, int N,
                                 std::uint64_t seed);

/// Local Whittle estimates for the fGLE Delta X pipeline.
std::vector<double> lw_fgle_wavelet(double zeta, double mass, double d, int J, int n, int bw,
                                    int N, std::uint64_t seed,
                                    Smoothing smoothing = Smoothing::Smoothed);
std::vector<double> lw_fgle_exact(ExactKind kind, double zeta, double mass, double d, int n,
                                  int bw, int N, std::uint64_t seed);

/// Spectral goodness-of-fit statistics for sampled fOU velocity paths.
std::vector<double> gof_fou(GofMethod method, double zeta, double d, int n, int N,
                            std::uint64_t seed, int J = 6);

// --- table-level runners (desk-scale defaults of the reference tables) ---

std::vector<MCReport> run_table3(int N, int n, std::uint64_t seed);
std::vector<MCReport> run_table4(int N, int n, std::uint64_t seed);
std::vector<MCReport> run_table5(int N, int n, std::uint64_t seed);
std::vector<MCReport> run_table6(int N, int n, std::uint64_t seed);
std::vector<MCReport> run_gof(int N, int n, std::uint64_t seed);

/// Default Local Whittle bandwidth for the comparison studies.
inline int comparison_bandwidth(int n) { return n >= 512 ? 40 : default_lw_bandwidth(n); }

}  // namespace adsim::experiments
