#pragma once

#include <string>
#include <vector>

#include "adsim/errors.hpp"
#include "adsim/rng.hpp"

namespace adsim {

/// Autocovariances r[0..N-1] of a stationary Gaussian sequence.
struct AcvfTable {
    std::vector<double> values;
    std::string source;
};

/// Validates r[0] > 0 and |r[k]| <= r[0]; throws ParameterOutOfRange.
AcvfTable make_acvf_table(std::vector<double> values, std::string source);

/// Dense Cholesky factor of the Toeplitz covariance built from an acvf table.
/// Factor once, sample many.
class CholeskyFactor {
  public:
    CholeskyFactor(const AcvfTable& r, int n);

    int size() const { return n_; }
    std::vector<double> sample(GaussianRng& rng) const;
    /// Row-major lower-triangular factor (row i stored in entries [i(i+1)/2, ...]).
    const std::vector<double>& packed_lower() const { return l_; }

  private:
    int n_;
    std::vector<double> l_;
};

std::vector<double> cholesky_simulate(const AcvfTable& r, int n, GaussianRng& rng);

/// Circulant matrix embedding sampler: exact stationary Gaussian sequences via
/// the discrete Fourier diagonalization of the embedded covariance.
class CmeSampler {
  public:
    CmeSampler(const AcvfTable& r, int n);

    int size() const { return n_; }
    std::size_t embedding_size() const { return m_; }
    bool clipped_eigenvalues() const { return clipped_; }
    double min_eigenvalue() const { return min_eig_; }
    std::vector<double> sample(GaussianRng& rng) const;

  private:
    int n_;
    std::size_t m_;
    bool clipped_ = false;
    double min_eig_ = 0.0;
    std::vector<double> sqrt_eig_;
};

std::vector<double> cme_simulate(const AcvfTable& r, int n, GaussianRng& rng);

/// Stationary AR(1): X_0 ~ N(0, sd^2/(1-phi^2)), X_{t+1} = phi X_t + sd eps_t.
std::vector<double> ar1_simulate(double phi, double innovation_sd, int n, GaussianRng& rng);

}  // namespace adsim
