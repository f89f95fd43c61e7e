#pragma once

#include "distprod/errors.hpp"

namespace distprod::regularize {

/// Boundary-value difference of the Cauchy transform of delta^(k):
///
///   (delta^(k))_red(x, eps)
///     = k! (-1)^(k+1) / (2 pi i) [ (x+i eps)^-(k+1) - (x-i eps)^-(k+1) ]
///     = k! (-1)^k / pi * sin((k+1) atan2(eps, x)) / (x^2+eps^2)^((k+1)/2)
///
/// evaluated in real arithmetic. k = 0 is the Poisson kernel
/// eps / (pi (x^2 + eps^2)).
class CauchyField {
public:
    CauchyField(int k, double epsilon);

    int order() const { return k_; }
    double epsilon() const { return epsilon_; }

    double value(double x) const;

private:
    int k_;
    double epsilon_;
    double factor_;  // k! (-1)^k / pi
};

/// Builds the closed-form regularized field for delta^(k); k <= 8.
CauchyField cauchy_reduce(int k, double epsilon);

}  // namespace distprod::regularize
