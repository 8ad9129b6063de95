#pragma once

#include <stdexcept>
#include <string>

namespace adsim {

struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularityAtOrigin : std::domain_error {
    using std::domain_error::domain_error;
};

struct MaxSubdivisionsExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteIntegrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TailBoundUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RatioUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : std::runtime_error {
    int leading_minor;
    explicit NotPositiveDefinite(int minor)
        : std::runtime_error("covariance matrix not positive definite at leading minor " +
                             std::to_string(minor)),
          leading_minor(minor) {}
};

struct NegativeEigenvalue : std::runtime_error {
    double min_eigenvalue;
    explicit NegativeEigenvalue(double lambda_min)
        : std::runtime_error("circulant embedding has negative eigenvalue " +
                             std::to_string(lambda_min)),
          min_eigenvalue(lambda_min) {}
};

struct NonStationary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ModelDensityZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace adsim
