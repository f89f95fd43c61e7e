#include "distprod/distrib.hpp"

#include <cmath>
#include <numeric>

namespace distprod::distrib {

namespace {

constexpr double kEdgeGuard = 1.4e-3;  // same underflow band as the mollifier
constexpr double kE = 2.718281828459045235;

double unit_bump(double tsq) {
    // exp(1/(rho^2-1)) with tsq = 1 - rho^2
    if (tsq <= kEdgeGuard) return 0.0;
    return std::exp(-1.0 / tsq);
}

double poly_eval(const std::vector<double>& p, double x) {
    double acc = 0.0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

}  // namespace

int DeltaTerm::total_order() const {
    return std::accumulate(orders.begin(), orders.end(), 0);
}

void DistributionExpr::validate() const {
    if (dim < 1) throw UsageError("distribution dimension must be >= 1");
    for (const DeltaTerm& t : deltas) {
        if (static_cast<int>(t.orders.size()) != dim || static_cast<int>(t.point.size()) != dim)
            throw UsageError("delta term dimension mismatch");
        for (int k : t.orders)
            if (k < 0) throw UsageError("delta derivative orders must be >= 0");
        if (t.total_order() > mollifier::kMaxDerivOrder)
            throw UnsupportedOrder("delta derivative order must be <= 8");
    }
    for (const ContinuousTerm& t : continuous) {
        if (t.support.dim() != dim) throw UsageError("continuous term dimension mismatch");
        if (!t.fn) throw UsageError("continuous term has no callable");
    }
}

DistributionExpr DistributionExpr::delta(int order, double x0) {
    DistributionExpr e;
    e.dim = 1;
    e.deltas.push_back(DeltaTerm{1.0, {order}, {x0}});
    return e;
}

DistributionExpr DistributionExpr::delta_nd(std::vector<int> orders, std::vector<double> point) {
    DistributionExpr e;
    e.dim = static_cast<int>(orders.size());
    e.deltas.push_back(DeltaTerm{1.0, std::move(orders), std::move(point)});
    return e;
}

DistributionExpr DistributionExpr::hat(double a, double b) {
    if (!(a < b)) throw UsageError("hat: requires a < b");
    DistributionExpr e;
    e.dim = 1;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    ContinuousTerm t;
    t.coeff = 1.0;
    t.fn = [mid, half](std::span<const double> x) {
        return std::max(0.0, 1.0 - std::abs(x[0] - mid) / half);
    };
    t.support = Box::interval(a, b);
    e.continuous.push_back(std::move(t));
    return e;
}

TestFunction TestFunction::bump(int dim, double scale, double halfwidth,
                                std::vector<double> center) {
    TestFunction f;
    f.dim_ = dim;
    f.kind_ = TestKind::Bump;
    f.scale_ = scale;
    f.halfwidth_ = halfwidth;
    f.center_ = center.empty() ? std::vector<double>(dim, 0.0) : std::move(center);
    if (static_cast<int>(f.center_.size()) != dim)
        throw UsageError("test function center dimension mismatch");
    return f;
}

TestFunction TestFunction::poly_bump(std::vector<double> poly_coeffs, int dim, double halfwidth) {
    TestFunction f = bump(dim, 1.0, halfwidth);
    f.kind_ = TestKind::PolyBump;
    f.poly_ = std::move(poly_coeffs);
    if (f.poly_.empty()) throw UsageError("poly_bump: empty coefficient list");
    return f;
}

TestFunction TestFunction::vanishing_at_origin(int axis, int power, int dim, double halfwidth) {
    if (axis < 0 || axis >= dim) throw UsageError("vanishing_at_origin: axis out of range");
    if (power < 1) throw UsageError("vanishing_at_origin: power must be >= 1");
    TestFunction f = bump(dim, 1.0, halfwidth);
    f.kind_ = TestKind::VanishingAtOrigin;
    f.axis_ = axis;
    f.power_ = power;
    return f;
}

TestFunction TestFunction::axis_bump(int dim, double scale, double halfwidth,
                                     std::vector<double> center) {
    TestFunction f = bump(dim, scale, halfwidth, std::move(center));
    f.kind_ = TestKind::AxisBump;
    return f;
}

double TestFunction::value(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw UsageError("TestFunction::value: point dimension mismatch");
    if (kind_ == TestKind::AxisBump) {
        double prod = scale_ * std::pow(kE, dim_ - 1);
        for (int j = 0; j < dim_; ++j) {
            const double y = (x[j] - center_[j]) / halfwidth_;
            prod *= unit_bump((1.0 - y) * (1.0 + y));
            if (prod == 0.0) return 0.0;
        }
        return prod;
    }

    double rho_sq = 0.0;
    for (int j = 0; j < dim_; ++j) {
        const double y = (x[j] - center_[j]) / halfwidth_;
        rho_sq += y * y;
    }
    const double base = unit_bump(1.0 - rho_sq);
    if (base == 0.0) return 0.0;
    switch (kind_) {
        case TestKind::Bump:
            return scale_ * base;
        case TestKind::PolyBump:
            return poly_eval(poly_, x[0]) * base;
        case TestKind::VanishingAtOrigin:
            return std::pow(x[axis_], power_) * base;
        case TestKind::AxisBump:
            break;  // handled above
    }
    return 0.0;
}

Box TestFunction::support() const {
    Box b;
    b.lo.resize(dim_);
    b.hi.resize(dim_);
    for (int j = 0; j < dim_; ++j) {
        b.lo[j] = center_[j] - halfwidth_;
        b.hi[j] = center_[j] + halfwidth_;
    }
    return b;
}

bool TestFunction::separable() const { return dim_ == 1 || kind_ == TestKind::AxisBump; }

double TestFunction::axis_value(int axis, double x) const {
    if (dim_ == 1) return value1(x);
    if (kind_ != TestKind::AxisBump)
        throw UsageError("axis_value: test function is not separable");
    const double y = (x - center_[axis]) / halfwidth_;
    double v = unit_bump((1.0 - y) * (1.0 + y));
    if (axis == 0) v *= scale_ * std::pow(kE, dim_ - 1);
    return v;
}

bool TestFunction::radial_about(std::span<const double> point) const {
    if (kind_ != TestKind::Bump || static_cast<int>(point.size()) != dim_) return false;
    for (int j = 0; j < dim_; ++j)
        if (point[j] != center_[j]) return false;
    return true;
}

double TestFunction::radial_value(double r) const {
    if (kind_ != TestKind::Bump)
        throw UsageError("radial_value: only the radial Bump kind supports it");
    const double y = r / halfwidth_;
    return scale_ * unit_bump((1.0 - y) * (1.0 + y));
}

SmoothField mollify(const DistributionExpr& T, const mollifier::Mollifier& phi, double alpha,
                    long n) {
    T.validate();
    const mollifier::MollifierSpec& spec = phi.spec();
    if (T.dim != spec.d) throw UsageError("mollify: dimension mismatch");
    if (n < 1) throw UsageError("mollify: n must be >= 1");
    if (!(alpha > 0.0)) throw UsageError("mollify: alpha must be positive");

    const int d = T.dim;
    const double s = std::pow(static_cast<double>(n), alpha);
    const double inv_s = 1.0 / s;

    struct Piece {
        std::function<double(std::span<const double>)> fn;
        Box support;
    };
    std::vector<Piece> pieces;

    for (const DeltaTerm& t : T.deltas) {
        const int total = t.total_order();
        if (spec.kind == mollifier::Kind::RadialND && total != 0)
            throw UnsupportedOrder("radial mollifier cannot mollify delta derivatives");
        if (spec.kind == mollifier::Kind::OneD) {
            const int k = t.orders[0];
            const double x0 = t.point[0];
            const double amp = t.coeff * std::pow(static_cast<double>(n), alpha * (k + 1));
            pieces.push_back(
                {[&phi, k, x0, amp, s](std::span<const double> x) {
                     return amp * phi.deriv1d(k, s * (x[0] - x0));
                 },
                 Box::interval(x0 - inv_s, x0 + inv_s)});
        } else {
            const double amp =
                t.coeff * std::pow(static_cast<double>(n), alpha * (d + total));
            Box bx;
            bx.lo.resize(d);
            bx.hi.resize(d);
            for (int j = 0; j < d; ++j) {
                bx.lo[j] = t.point[j] - inv_s;
                bx.hi[j] = t.point[j] + inv_s;
            }
            if (spec.kind == mollifier::Kind::ProductND) {
                pieces.push_back({[&phi, t, amp, s, d](std::span<const double> x) {
                                      double prod = amp;
                                      for (int j = 0; j < d; ++j) {
                                          prod *= phi.deriv1d(t.orders[j], s * (x[j] - t.point[j]));
                                          if (prod == 0.0) return 0.0;
                                      }
                                      return prod;
                                  },
                                  bx});
            } else {
                pieces.push_back({[&phi, t, amp, s, d](std::span<const double> x) {
                                      double sq = 0.0;
                                      for (int j = 0; j < d; ++j) {
                                          const double dx = s * (x[j] - t.point[j]);
                                          sq += dx * dx;
                                      }
                                      return amp * phi.radial_profile(std::sqrt(sq));
                                  },
                                  bx});
            }
        }
    }

    for (const ContinuousTerm& t : T.continuous) {
        Box bx = t.support;
        for (int j = 0; j < d; ++j) {
            bx.lo[j] -= inv_s;
            bx.hi[j] += inv_s;
        }
        // (f * delta_n)(x) = int f(x - v/n^alpha) Phi(v) dv over [-1,1]^d
        auto conv = [&phi, t, inv_s, d](std::span<const double> x) {
            quad::QuadRequest req;
            req.domain.lo.assign(d, -1.0);
            req.domain.hi.assign(d, 1.0);
            req.rel_tol = 1e-9;
            req.abs_tol = 1e-13;
            auto integrand_at = [&](const double* v) {
                std::vector<double> y(d);
                for (int j = 0; j < d; ++j) y[j] = x[j] - inv_s * v[j];
                const double pv = phi.value({v, static_cast<size_t>(d)});
                if (pv == 0.0) return 0.0;
                return t.fn(y) * pv;
            };
            quad::QuadResult res;
            if (d == 1) {
                res = quad::integrate_1d(req, [&](double v) { return integrand_at(&v); });
            } else {
                res = quad::integrate_nd(req, integrand_at);
            }
            return t.coeff * res.value;
        };
        pieces.push_back({std::move(conv), bx});
    }

    if (pieces.empty()) throw UsageError("mollify: empty distribution");

    Box hull = pieces.front().support;
    for (size_t i = 1; i < pieces.size(); ++i) {
        for (int j = 0; j < d; ++j) {
            hull.lo[j] = std::min(hull.lo[j], pieces[i].support.lo[j]);
            hull.hi[j] = std::max(hull.hi[j], pieces[i].support.hi[j]);
        }
    }

    SmoothField field;
    field.support = hull;
    field.fn = [pieces = std::move(pieces)](std::span<const double> x) {
        double acc = 0.0;
        for (const Piece& p : pieces) acc += p.fn(x);
        return acc;
    };
    return field;
}

double fd_derivative(const std::function<double(double)>& f, double x, int order, double h) {
    if (order < 0 || order > 4) throw UnsupportedOrder("fd_derivative: order must be in [0, 4]");
    if (order == 0) return f(x);

    auto stencil = [&](double hh) {
        switch (order) {
            case 1:
                return (f(x + hh) - f(x - hh)) / (2.0 * hh);
            case 2:
                return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
            case 3:
                return (f(x + 2.0 * hh) - 2.0 * f(x + hh) + 2.0 * f(x - hh) - f(x - 2.0 * hh)) /
                       (2.0 * hh * hh * hh);
            default:
                return (f(x + 2.0 * hh) - 4.0 * f(x + hh) + 6.0 * f(x) - 4.0 * f(x - hh) +
                        f(x - 2.0 * hh)) /
                       (hh * hh * hh * hh);
        }
    };
    // one Richardson step on the O(h^2) central stencils
    return (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
}

}  // namespace distprod::distrib
