#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "adsim/models.hpp"

namespace adsim {

enum class QuadMethod { Lobatto, GaussKronrod };

struct QuadratureConfig {
    QuadMethod method = QuadMethod::Lobatto;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double rho = 1e-12;  // radius of the excluded ball around a declared singularity
    int max_subdivisions = 200000;
    std::vector<double> breakpoints;  // interior points the subdivision must not cross
};

/// rho default, widened near the edge of the admissible fractional range.
inline double default_rho(double delta) { return std::abs(delta) >= 0.45 ? 1e-11 : 1e-12; }

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Adaptive quadrature of f over [a, b].  Subdivision never straddles a
/// declared breakpoint.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg);

/// (1/2pi) int_{-pi}^{pi} Re(e^{ikx} fhat(x)) dx.
/// When `singular_at_origin` is set, a ball of radius cfg.rho around 0 is
/// excluded from the integration range.
double time_filter_coeff(const std::function<std::complex<double>(double)>& fhat, int k,
                         const QuadratureConfig& cfg, bool singular_at_origin = false);

/// Real even-integrand variant: (1/2pi) int_{-pi}^{pi} cos(kx) fhat(x) dx,
/// computed over the positive half-line by evenness.
double time_filter_coeff_even(const std::function<double(double)>& fhat, int k,
                              const QuadratureConfig& cfg, bool singular_at_origin = false);

/// acvf(t) = (1/2pi) int_R e^{itx} f(x) dx = (1/pi) int_0^inf cos(tx) f(x) dx.
/// The improper tail is cut where the power-law bound from f.tail_order drops
/// below abs_tol; requires tail_order >= 2 unless a positive `cutoff` is given.
double acvf_from_density(const SpectralDensityFn& f, double t, const QuadratureConfig& cfg,
                         double cutoff = 0.0);

}  // namespace adsim
