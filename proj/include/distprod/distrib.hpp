#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "distprod/mollifier.hpp"
#include "distprod/quadrature.hpp"

namespace distprod::distrib {

using quad::Box;

/// coeff * delta^(orders) at `point`. In 1-D `orders` has one entry; in d
/// dimensions it is a multi-index (RadialND use requires |orders| = 0).
struct DeltaTerm {
    double coeff = 1.0;
    std::vector<int> orders;
    std::vector<double> point;

    int total_order() const;
};

/// coeff * f for a continuous function with compact support.
struct ContinuousTerm {
    double coeff = 1.0;
    std::function<double(std::span<const double>)> fn;
    Box support;
};

/// Finite sum of delta-derivative terms and continuous compact-support
/// terms; the class of objects the product definitions operate on.
struct DistributionExpr {
    int dim = 1;
    std::vector<DeltaTerm> deltas;
    std::vector<ContinuousTerm> continuous;

    void validate() const;

    static DistributionExpr delta(int order = 0, double x0 = 0.0);
    static DistributionExpr delta_nd(std::vector<int> orders, std::vector<double> point);
    /// Triangle hat: 1 at the midpoint of [a,b], affine to 0 at the ends.
    static DistributionExpr hat(double a, double b);
};

enum class TestKind { Bump, PolyBump, VanishingAtOrigin, AxisBump };

/// Smooth compactly supported test function with exact evaluation.
///
/// Bump: c * exp(1/(rho^2-1)), rho = |x-center|/s (radial in d > 1).
/// PolyBump: polynomial in x_0 times the unit bump.
/// VanishingAtOrigin: x_axis^power times the unit bump (value 0 at 0).
/// AxisBump: c e^(d-1) prod_j exp(1/(y_j^2-1)) - separable; equals Bump in 1-D.
class TestFunction {
public:
    static TestFunction bump(int dim = 1, double scale = 2.718281828459045235,
                             double halfwidth = 1.0, std::vector<double> center = {});
    static TestFunction poly_bump(std::vector<double> poly_coeffs, int dim = 1,
                                  double halfwidth = 1.0);
    static TestFunction vanishing_at_origin(int axis = 0, int power = 1, int dim = 1,
                                            double halfwidth = 1.0);
    static TestFunction axis_bump(int dim, double scale = 2.718281828459045235,
                                  double halfwidth = 1.0, std::vector<double> center = {});

    int dim() const { return dim_; }
    TestKind kind() const { return kind_; }
    const std::vector<double>& center() const { return center_; }
    double halfwidth() const { return halfwidth_; }

    double value(std::span<const double> x) const;
    double value1(double x) const { return value({&x, 1}); }
    Box support() const;

    bool separable() const;
    /// Per-axis factor of a separable function; axis 0 carries the scale.
    double axis_value(int axis, double x) const;
    bool radial_about(std::span<const double> point) const;
    /// Value at radius r from the center (radial kinds only).
    double radial_value(double r) const;

private:
    TestFunction() = default;

    int dim_ = 1;
    TestKind kind_ = TestKind::Bump;
    std::vector<double> center_;
    double halfwidth_ = 1.0;
    double scale_ = 1.0;
    std::vector<double> poly_;  // PolyBump coefficients, ascending
    int axis_ = 0;              // VanishingAtOrigin
    int power_ = 1;
};

/// Smooth function with a known support box (result of mollification).
struct SmoothField {
    std::function<double(std::span<const double>)> fn;
    Box support;

    double value1(double x) const { return fn({&x, 1}); }
};

/// T * delta_n^(alpha): closed form for delta terms, numerical convolution
/// for continuous terms.
SmoothField mollify(const DistributionExpr& T, const mollifier::Mollifier& phi, double alpha,
                    long n);

/// Central finite-difference derivative with one Richardson refinement,
/// orders 0..4. Used for oracle checks against closed-form evaluations.
double fd_derivative(const std::function<double(double)>& f, double x, int order,
                     double h = 1e-3);

}  // namespace distprod::distrib
