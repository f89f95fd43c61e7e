#pragma once

#include <span>
#include <vector>

#include "distprod/errors.hpp"

namespace distprod::mollifier {

enum class Kind { OneD, ProductND, RadialND };

/// The bump family: order m (even, >= 2), shape, spatial dimension.
struct MollifierSpec {
    int m = 2;
    Kind kind = Kind::OneD;
    int d = 1;

    /// Throws UsageError if the invariants do not hold.
    void validate() const;
};

/// Maximum derivative order supported by the closed-form evaluator.
inline constexpr int kMaxDerivOrder = 8;

/// Polynomial part of the k-th derivative of the unnormalized profile:
/// d^k/dx^k [x^m exp(1/(x^2-1))] = poly(x) / (1-x^2)^(2k) * exp(1/(x^2-1)).
/// poly is built once per (m, k) by the recurrence
/// P_{k+1} = (x^2-1) [ (x^2-1) P_k' - 4 k x P_k ] - 2 x P_k,  P_0 = x^m.
struct RationalPrefactor {
    int k = 0;
    std::vector<double> poly;  // coefficients, ascending powers

    double eval_poly(double x) const;
};

/// Returns the cached prefactor for (m, k); thread-safe.
const RationalPrefactor& prefactor(int m, int k);

/// Evaluator for one bump family member. All methods are pure and
/// thread-safe; the normalization constant is computed on first use.
class Mollifier {
public:
    explicit Mollifier(MollifierSpec spec);

    const MollifierSpec& spec() const { return spec_; }

    /// N_m (OneD and per-axis ProductND) or N'_m (RadialND).
    double norm() const;

    /// Phi at a d-dimensional point (k = 0 value of any kind).
    double value(std::span<const double> x) const;

    /// 1-D profile derivative Phi^(k)(x). For ProductND this is the
    /// per-axis factor; RadialND rejects k > 0.
    double deriv1d(int k, double x) const;

    /// Radial profile Phi(r) for RadialND, r >= 0.
    double radial_profile(double r) const;

    /// delta_n^(alpha)(x) = n^(d alpha) Phi(n^alpha x).
    double delta_seq(double alpha, long n, std::span<const double> x) const;

private:
    MollifierSpec spec_;
    double norm_ = 0.0;
};

/// Unnormalized k-th profile derivative d^k/dx^k [x^m exp(1/(x^2-1))],
/// exactly 0 outside the support and inside the underflow guard band.
double unnormalized_deriv(int m, int k, double x);

}  // namespace distprod::mollifier
