#pragma once

#include <array>
#include <functional>
#include <vector>

#include "distprod/errors.hpp"

namespace distprod::quad {

using Fn1 = std::function<double(double)>;
using FnN = std::function<double(const double*)>;

/// Axis-aligned integration box, d <= 3.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }
    double width(int axis) const { return hi[axis] - lo[axis]; }
    bool empty() const;

    static Box interval(double a, double b) { return Box{{a}, {b}}; }
    /// Per-axis intersection; a collapsed or inverted axis makes the box empty.
    static Box intersect(const Box& a, const Box& b);
};

struct QuadRequest {
    Box domain;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

/// Adaptive 1-D integration with an embedded Clenshaw-Curtis 8/16 pair.
///
/// Deterministic: the initial subdivision places panel boundaries at the
/// domain image of 0 and +-(1 - 2^-j), j = 1..6 (the canonical [-1,1]
/// points where compactly supported bumps flatten out), and refinement
/// always bisects the panel with the largest error estimate, ties broken
/// toward the leftmost panel. The returned value is the left-to-right sum
/// of panel results, so it does not depend on refinement history.
QuadResult integrate_1d(const QuadRequest& req, const Fn1& f);

/// Iterated adaptive integration over a 2-D or 3-D box (outer axis 0).
QuadResult integrate_nd(const QuadRequest& req, const FnN& f);

/// Surface measure of the unit (d-1)-sphere, 2 pi^(d/2) / Gamma(d/2).
double sphere_area(int d);

/// Integral of a radially symmetric function over the unit ball in R^d:
/// sphere_area(d) * int_0^1 r^(d-1) f(r) dr.
QuadResult integrate_radial(const Fn1& radial_profile, int d, double rel_tol = 1e-10,
                            double abs_tol = 1e-14, int max_subdivisions = 2000);

/// Throws NumericalError if the result did not converge.
double require(const QuadResult& res, const char* what);

}  // namespace distprod::quad
