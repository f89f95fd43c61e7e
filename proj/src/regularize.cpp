#include "distprod/regularize.hpp"

#include <cmath>
#include <numbers>

namespace distprod::regularize {

CauchyField::CauchyField(int k, double epsilon) : k_(k), epsilon_(epsilon) {
    if (k < 0 || k > 8) throw UnsupportedOrder("cauchy_reduce: order must be in [0, 8]");
    if (!(epsilon > 0.0)) throw UsageError("cauchy_reduce: epsilon must be positive");
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    factor_ = (k % 2 == 0 ? fact : -fact) / std::numbers::pi;
}

double CauchyField::value(double x) const {
    // k! (-1)^k / pi * sin((k+1) theta) / r^(k+1), with x + i eps = r e^(i theta);
    // the conjugate pair difference reduces to this purely real form.
    // For x < 0 the angle sits near pi and sin((k+1) theta) would cancel
    // catastrophically; reflect to the small angle and use the exact parity
    // (delta^(k))_red(-x) = (-1)^k (delta^(k))_red(x) instead.
    const double ax = std::abs(x);
    const double r = std::hypot(ax, epsilon_);
    const double phi = std::atan2(epsilon_, ax);
    double s = std::sin((k_ + 1) * phi);
    if (x < 0.0 && k_ % 2 == 1) s = -s;
    return factor_ * s * std::pow(r, -(k_ + 1));
}

CauchyField cauchy_reduce(int k, double epsilon) { return CauchyField(k, epsilon); }

}  // namespace distprod::regularize
