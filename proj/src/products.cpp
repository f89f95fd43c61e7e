#include "distprod/products.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "distprod/regularize.hpp"

namespace distprod::products {

namespace {

using distrib::ContinuousTerm;
using distrib::DeltaTerm;
using distrib::SmoothField;
using quad::Box;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(lo < hi); }
};

Interval intersect(Interval a, Interval b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// Contribution of one term pair: value = n^rho * integral.
struct PairResult {
    double value = 0.0;
    double err = 0.0;
    double rho = 0.0;
};

double npow(long n, double e) { return std::pow(static_cast<double>(n), e); }

// Coarse Chebyshev probe of the integrand magnitude; used to derive an
// absolute tolerance floor matched to the natural scale of a rescaled
// integrand, so that parity-cancelling integrals can still converge.
double probe_scale_1d(const quad::Fn1& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double peak = 0.0;
    for (int i = 0; i <= 48; ++i)
        peak = std::max(peak, std::abs(f(mid + half * std::cos(i * std::numbers::pi / 48))));
    return peak;
}

double probe_scale_nd(const quad::FnN& f, const Box& box) {
    const int d = box.dim();
    const int per_axis = 9;
    std::vector<double> pt(d);
    double peak = 0.0;
    int total = 1;
    for (int j = 0; j < d; ++j) total *= per_axis;
    for (int idx = 0; idx < total; ++idx) {
        int rem = idx;
        for (int j = 0; j < d; ++j) {
            const int i = rem % per_axis;
            rem /= per_axis;
            const double c = std::cos(i * std::numbers::pi / (per_axis - 1));
            pt[j] = 0.5 * (box.lo[j] + box.hi[j]) + 0.5 * box.width(j) * c;
        }
        peak = std::max(peak, std::abs(f(pt.data())));
    }
    return peak;
}

quad::QuadResult adaptive_1d(const quad::Fn1& f, double a, double b, double rel_tol,
                             int max_subdivisions) {
    quad::QuadRequest req;
    req.domain = Box::interval(a, b);
    req.rel_tol = rel_tol;
    const double peak = probe_scale_1d(f, a, b);
    req.abs_tol = std::max(1e-300, 1e-2 * rel_tol * peak * (b - a));
    req.max_subdivisions = max_subdivisions;
    return quad::integrate_1d(req, f);
}

quad::QuadResult adaptive_nd(const quad::FnN& f, const Box& box, double rel_tol,
                             int max_subdivisions) {
    quad::QuadRequest req;
    req.domain = box;
    req.rel_tol = rel_tol;
    double measure = 1.0;
    for (int j = 0; j < box.dim(); ++j) measure *= box.width(j);
    const double peak = probe_scale_nd(f, box);
    req.abs_tol = std::max(1e-300, 1e-2 * rel_tol * peak * measure);
    req.max_subdivisions = max_subdivisions;
    return quad::integrate_nd(req, f);
}

double require_sample(const quad::QuadResult& res, const char* what) {
    if (!res.converged)
        throw NumericalError(std::string(what) + ": quadrature did not converge", res.value,
                             res.error_estimate);
    return res.value;
}

// ---------------------------------------------------------------------------
// delta x delta pairs, rescaled coordinates u = n^max(a,b) (x - x_wide)

PairResult delta_pair_1d(const Mollifier& phi, const TestFunction& psi, const DeltaTerm& s,
                         double a, const DeltaTerm& t, double b, long n, double rel_tol,
                         int max_sub) {
    // the factor with the larger exponent (narrower spike) sets the frame
    const bool s_wide = a >= b;
    const DeltaTerm& w = s_wide ? s : t;
    const DeltaTerm& o = s_wide ? t : s;
    const double g = s_wide ? a : b;       // gamma = max(a, b)
    const double oe = s_wide ? b : a;      // exponent of the other factor
    const int kw = w.orders[0], ko = o.orders[0];
    const double center = w.point[0];

    const double q_scale = npow(n, oe - g);  // <= 1
    const double q_shift = npow(n, oe) * (center - o.point[0]);

    Interval dom{-1.0, 1.0};
    dom = intersect(dom, {(-1.0 - q_shift) / q_scale, (1.0 - q_shift) / q_scale});
    const Box psup = psi.support();
    const double ng = npow(n, g);
    dom = intersect(dom, {ng * (psup.lo[0] - center), ng * (psup.hi[0] - center)});
    if (dom.empty()) return {};

    const double inv_ng = 1.0 / ng;
    auto integrand = [&](double u) {
        const double fw = phi.deriv1d(kw, u);
        if (fw == 0.0) return 0.0;
        const double fo = phi.deriv1d(ko, q_scale * u + q_shift);
        if (fo == 0.0) return 0.0;
        return fw * fo * psi.value1(center + inv_ng * u);
    };

    quad::QuadResult res = adaptive_1d(integrand, dom.lo, dom.hi, rel_tol, max_sub);
    require_sample(res, "delta pair");

    PairResult out;
    out.rho = a * (s.orders[0] + 1) + b * (t.orders[0] + 1) - g;
    const double amp = s.coeff * t.coeff * npow(n, out.rho);
    out.value = amp * res.value;
    out.err = std::abs(amp) * res.error_estimate;
    return out;
}

PairResult delta_pair_product_nd(const Mollifier& phi, const TestFunction& psi,
                                 const DeltaTerm& s, double a, const DeltaTerm& t, double b,
                                 long n, double rel_tol, int max_sub) {
    const int d = phi.spec().d;
    const bool s_wide = a >= b;
    const DeltaTerm& w = s_wide ? s : t;
    const DeltaTerm& o = s_wide ? t : s;
    const double g = s_wide ? a : b;
    const double oe = s_wide ? b : a;

    const double q_scale = npow(n, oe - g);
    const double ng = npow(n, g);
    const double inv_ng = 1.0 / ng;
    const Box psup = psi.support();

    std::vector<Interval> dom(d);
    std::vector<double> q_shift(d);
    for (int j = 0; j < d; ++j) {
        q_shift[j] = npow(n, oe) * (w.point[j] - o.point[j]);
        dom[j] = intersect({-1.0, 1.0},
                           {(-1.0 - q_shift[j]) / q_scale, (1.0 - q_shift[j]) / q_scale});
        dom[j] = intersect(dom[j], {ng * (psup.lo[j] - w.point[j]),
                                    ng * (psup.hi[j] - w.point[j])});
        if (dom[j].empty()) return {};
    }

    PairResult out;
    out.rho = a * (d + s.total_order()) + b * (d + t.total_order()) - d * g;
    const double amp = s.coeff * t.coeff * npow(n, out.rho);

    if (psi.separable()) {
        // per-axis factorization
        double value = 1.0, err = 0.0;
        for (int j = 0; j < d; ++j) {
            auto f = [&](double u) {
                const double fw = phi.deriv1d(w.orders[j], u);
                if (fw == 0.0) return 0.0;
                const double fo = phi.deriv1d(o.orders[j], q_scale * u + q_shift[j]);
                if (fo == 0.0) return 0.0;
                return fw * fo * psi.axis_value(j, w.point[j] + inv_ng * u);
            };
            quad::QuadResult res = adaptive_1d(f, dom[j].lo, dom[j].hi, rel_tol, max_sub);
            require_sample(res, "delta pair (axis)");
            err = err * std::abs(res.value) + res.error_estimate * std::abs(value);
            value *= res.value;
        }
        out.value = amp * value;
        out.err = std::abs(amp) * err;
        return out;
    }

    Box box;
    box.lo.resize(d);
    box.hi.resize(d);
    for (int j = 0; j < d; ++j) {
        box.lo[j] = dom[j].lo;
        box.hi[j] = dom[j].hi;
    }
    std::vector<double> x(d);
    auto f = [&, x](const double* u) mutable {
        double prod = 1.0;
        for (int j = 0; j < d; ++j) {
            prod *= phi.deriv1d(w.orders[j], u[j]);
            if (prod == 0.0) return 0.0;
        }
        for (int j = 0; j < d; ++j) {
            prod *= phi.deriv1d(o.orders[j], q_scale * u[j] + q_shift[j]);
            if (prod == 0.0) return 0.0;
        }
        for (int j = 0; j < d; ++j) x[j] = w.point[j] + inv_ng * u[j];
        return prod * psi.value(x);
    };
    quad::QuadResult res = adaptive_nd(f, box, rel_tol, max_sub);
    require_sample(res, "delta pair (nd)");
    out.value = amp * res.value;
    out.err = std::abs(amp) * res.error_estimate;
    return out;
}

PairResult delta_pair_radial(const Mollifier& phi, const TestFunction& psi, const DeltaTerm& s,
                             double a, const DeltaTerm& t, double b, long n, double rel_tol,
                             int max_sub) {
    const int d = phi.spec().d;
    const bool s_wide = a >= b;
    const DeltaTerm& w = s_wide ? s : t;
    const DeltaTerm& o = s_wide ? t : s;
    const double g = s_wide ? a : b;
    const double oe = s_wide ? b : a;

    const double q_scale = npow(n, oe - g);
    const double ng = npow(n, g);
    const double inv_ng = 1.0 / ng;

    PairResult out;
    out.rho = d * (a + b - g);
    const double amp = s.coeff * t.coeff * npow(n, out.rho);

    const bool same_point = w.point == o.point;
    if (same_point && psi.radial_about(w.point)) {
        // fully radial integrand: reduce to one dimension
        auto f = [&](double r) {
            const double fw = phi.radial_profile(r);
            if (fw == 0.0) return 0.0;
            return fw * phi.radial_profile(q_scale * r) * psi.radial_value(inv_ng * r);
        };
        quad::QuadResult res =
            quad::integrate_radial(f, d, rel_tol, 1e-300, max_sub);
        if (!res.converged) {
            // retry with a scale-aware absolute floor
            const double peak = probe_scale_1d(f, 0.0, 1.0) * quad::sphere_area(d);
            res = quad::integrate_radial(f, d, rel_tol, std::max(1e-300, 1e-2 * rel_tol * peak),
                                         max_sub);
        }
        require_sample(res, "delta pair (radial)");
        out.value = amp * res.value;
        out.err = std::abs(amp) * res.error_estimate;
        return out;
    }

    const Box psup = psi.support();
    std::vector<double> q_shift(d);
    Box box;
    box.lo.resize(d);
    box.hi.resize(d);
    for (int j = 0; j < d; ++j) {
        q_shift[j] = npow(n, oe) * (w.point[j] - o.point[j]);
        Interval dom = intersect({-1.0, 1.0},
                                 {(-1.0 - q_shift[j]) / q_scale, (1.0 - q_shift[j]) / q_scale});
        dom = intersect(dom, {ng * (psup.lo[j] - w.point[j]), ng * (psup.hi[j] - w.point[j])});
        if (dom.empty()) return {};
        box.lo[j] = dom.lo;
        box.hi[j] = dom.hi;
    }

    std::vector<double> x(d);
    auto f = [&, x](const double* u) mutable {
        double sq = 0.0;
        for (int j = 0; j < d; ++j) sq += u[j] * u[j];
        const double fw = phi.radial_profile(std::sqrt(sq));
        if (fw == 0.0) return 0.0;
        double osq = 0.0;
        for (int j = 0; j < d; ++j) {
            const double v = q_scale * u[j] + q_shift[j];
            osq += v * v;
        }
        const double fo = phi.radial_profile(std::sqrt(osq));
        if (fo == 0.0) return 0.0;
        for (int j = 0; j < d; ++j) x[j] = w.point[j] + inv_ng * u[j];
        return fw * fo * psi.value(x);
    };
    quad::QuadResult res = adaptive_nd(f, box, rel_tol, max_sub);
    require_sample(res, "delta pair (radial nd)");
    out.value = amp * res.value;
    out.err = std::abs(amp) * res.error_estimate;
    return out;
}

PairResult delta_pair(const Mollifier& phi, const TestFunction& psi, const DeltaTerm& s,
                      double a, const DeltaTerm& t, double b, long n, double rel_tol,
                      int max_sub) {
    switch (phi.spec().kind) {
        case mollifier::Kind::OneD:
            return delta_pair_1d(phi, psi, s, a, t, b, n, rel_tol, max_sub);
        case mollifier::Kind::ProductND:
            return delta_pair_product_nd(phi, psi, s, a, t, b, n, rel_tol, max_sub);
        case mollifier::Kind::RadialND:
            return delta_pair_radial(phi, psi, s, a, t, b, n, rel_tol, max_sub);
    }
    return {};
}

// ---------------------------------------------------------------------------
// pairs with continuous factors (1-D)

DistributionExpr single_continuous(const ContinuousTerm& t) {
    DistributionExpr e;
    e.dim = t.support.dim();
    e.continuous.push_back(t);
    return e;
}

PairResult delta_cont_pair(const Mollifier& phi, const TestFunction& psi, const DeltaTerm& dt,
                           double de, const ContinuousTerm& ct, double ce, long n,
                           double rel_tol, int max_sub) {
    const int k = dt.orders[0];
    const double center = dt.point[0];
    const double ng = npow(n, de);
    const double inv_ng = 1.0 / ng;

    SmoothField field = distrib::mollify(single_continuous(ct), phi, ce, n);

    Interval dom{-1.0, 1.0};
    dom = intersect(dom, {ng * (field.support.lo[0] - center),
                          ng * (field.support.hi[0] - center)});
    const Box psup = psi.support();
    dom = intersect(dom, {ng * (psup.lo[0] - center), ng * (psup.hi[0] - center)});
    if (dom.empty()) return {};

    auto integrand = [&](double u) {
        const double fw = phi.deriv1d(k, u);
        if (fw == 0.0) return 0.0;
        const double x = center + inv_ng * u;
        return fw * field.value1(x) * psi.value1(x);
    };
    quad::QuadResult res = adaptive_1d(integrand, dom.lo, dom.hi, rel_tol, max_sub);
    require_sample(res, "delta-continuous pair");

    PairResult out;
    out.rho = de * k;
    const double amp = dt.coeff * npow(n, out.rho);
    out.value = amp * res.value;
    out.err = std::abs(amp) * res.error_estimate;
    return out;
}

PairResult cont_cont_pair(const Mollifier& phi, const TestFunction& psi,
                          const ContinuousTerm& s, double a, const ContinuousTerm& t, double b,
                          long n, double rel_tol, int max_sub) {
    SmoothField fs = distrib::mollify(single_continuous(s), phi, a, n);
    SmoothField ft = distrib::mollify(single_continuous(t), phi, b, n);

    Interval dom{fs.support.lo[0], fs.support.hi[0]};
    dom = intersect(dom, {ft.support.lo[0], ft.support.hi[0]});
    const Box psup = psi.support();
    dom = intersect(dom, {psup.lo[0], psup.hi[0]});
    if (dom.empty()) return {};

    auto integrand = [&](double x) { return fs.value1(x) * ft.value1(x) * psi.value1(x); };
    // each evaluation hides two convolution quadratures; keep the outer
    // tolerance above theirs
    quad::QuadResult res = adaptive_1d(integrand, dom.lo, dom.hi, std::max(rel_tol, 1e-8),
                                       max_sub);
    require_sample(res, "continuous pair");
    return {res.value, res.error_estimate, 0.0};
}

// ---------------------------------------------------------------------------

struct Accum {
    double value = 0.0;
    double err = 0.0;
    double rho = 0.0;
    bool any = false;

    void add(const PairResult& p) {
        value += p.value;
        err += p.err;
        rho = any ? std::max(rho, p.rho) : p.rho;
        any = true;
    }
};

/// int S_n^(a) T_n^(b) Psi for every term pair.
Accum bilinear(const ProductQuery& q, const DistributionExpr& S, double a,
               const DistributionExpr& T, double b, long n) {
    Mollifier phi(q.spec);
    Accum acc;
    for (const DeltaTerm& s : S.deltas)
        for (const DeltaTerm& t : T.deltas)
            acc.add(delta_pair(phi, q.psi, s, a, t, b, n, q.rel_tol, q.max_subdivisions));
    for (const DeltaTerm& s : S.deltas)
        for (const ContinuousTerm& t : T.continuous)
            acc.add(delta_cont_pair(phi, q.psi, s, a, t, b, n, q.rel_tol, q.max_subdivisions));
    for (const ContinuousTerm& s : S.continuous)
        for (const DeltaTerm& t : T.deltas)
            acc.add(delta_cont_pair(phi, q.psi, t, b, s, a, n, q.rel_tol, q.max_subdivisions));
    for (const ContinuousTerm& s : S.continuous)
        for (const ContinuousTerm& t : T.continuous)
            acc.add(cont_cont_pair(phi, q.psi, s, a, t, b, n, q.rel_tol, q.max_subdivisions));
    return acc;
}

/// int S_n^(beta)(x) T_red(x, n^-alpha) Psi(x) dx for delta expressions,
/// rescaled by the mollified factor's width. The regularized factor's
/// analytic n-power n^((l+2) beta - alpha) is factored out so the integrand
/// stays O(1).
Accum legacy_half(const ProductQuery& q, const DistributionExpr& Smoll,
                  const DistributionExpr& Tred, long n) {
    Mollifier phi(q.spec);
    const double beta = q.beta;
    const double eps = npow(n, -q.alpha);
    Accum acc;
    for (const DeltaTerm& ms : Smoll.deltas) {
        for (const DeltaTerm& rt : Tred.deltas) {
            const int k = ms.orders[0];
            const int l = rt.orders[0];
            regularize::CauchyField red = regularize::cauchy_reduce(l, eps);

            const double center = ms.point[0];
            const double ng = npow(n, beta);
            const double inv_ng = 1.0 / ng;
            const double red_scale = npow(n, q.alpha - (l + 2) * beta);

            Interval dom{-1.0, 1.0};
            const Box psup = q.psi.support();
            dom = intersect(dom, {ng * (psup.lo[0] - center), ng * (psup.hi[0] - center)});
            if (dom.empty()) continue;

            auto integrand = [&](double u) {
                const double fw = phi.deriv1d(k, u);
                if (fw == 0.0) return 0.0;
                const double x = center + inv_ng * u;
                return fw * red_scale * red.value(x - rt.point[0]) * q.psi.value1(x);
            };
            quad::QuadResult res =
                adaptive_1d(integrand, dom.lo, dom.hi, q.rel_tol, q.max_subdivisions);
            require_sample(res, "legacy pair");

            PairResult p;
            p.rho = beta * (k + l + 2) - q.alpha;
            const double amp = ms.coeff * rt.coeff * npow(n, p.rho);
            p.value = amp * res.value;
            p.err = std::abs(amp) * res.error_estimate;
            acc.add(p);
        }
    }
    return acc;
}

}  // namespace

void ProductQuery::validate() const {
    S.validate();
    T.validate();
    spec.validate();
    const int d = spec.d;
    if (S.dim != d || T.dim != d || psi.dim() != d)
        throw UsageError("product query: S, T, mollifier and Psi must share one dimension");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw UsageError("product query: alpha and beta must be positive");
    if (!(rel_tol > 0.0)) throw UsageError("product query: rel_tol must be positive");
    if (kind == ProductKind::LegacySym) {
        if (spec.kind != mollifier::Kind::OneD)
            throw UsageError("legacy product is defined in one dimension only");
        if (!S.continuous.empty() || !T.continuous.empty())
            throw UsageError("legacy product requires delta-derivative terms only");
    }
    if (spec.kind == mollifier::Kind::RadialND) {
        for (const DeltaTerm& t : S.deltas)
            if (t.total_order() != 0)
                throw UnsupportedOrder("radial mollifier products require order-0 deltas");
        for (const DeltaTerm& t : T.deltas)
            if (t.total_order() != 0)
                throw UnsupportedOrder("radial mollifier products require order-0 deltas");
    }
}

SequenceSample eval_product_at_n(const ProductQuery& q, long n) {
    q.validate();
    if (n < 1) throw UsageError("eval_product_at_n: n must be >= 1");

    Accum acc;
    switch (q.kind) {
        case ProductKind::Direct:
            acc = bilinear(q, q.S, q.alpha, q.T, q.beta, n);
            break;
        case ProductKind::Exchange:
            acc = bilinear(q, q.S, q.beta, q.T, q.alpha, n);
            break;
        case ProductKind::Sym: {
            Accum dir = bilinear(q, q.S, q.alpha, q.T, q.beta, n);
            Accum exch = bilinear(q, q.S, q.beta, q.T, q.alpha, n);
            acc.value = 0.5 * (dir.value + exch.value);
            acc.err = 0.5 * (dir.err + exch.err);
            acc.rho = std::max(dir.rho, exch.rho);
            break;
        }
        case ProductKind::LegacySym: {
            Accum one = legacy_half(q, q.S, q.T, n);
            Accum two = legacy_half(q, q.T, q.S, n);
            acc.value = 0.5 * (one.value + two.value);
            acc.err = 0.5 * (one.err + two.err);
            acc.rho = std::max(one.rho, two.rho);
            break;
        }
    }

    SequenceSample sample;
    sample.n = n;
    sample.value = acc.value;
    sample.quad_error = acc.err;
    sample.rescale_exponent = acc.rho;
    if (!std::isfinite(sample.value))
        throw NumericalError("eval_product_at_n: non-finite sample", sample.value,
                             sample.quad_error);
    return sample;
}

SequenceSample eval_product_naive(const ProductQuery& q, long n) {
    q.validate();
    if (n < 1 || n > 64)
        throw UsageError("eval_product_naive: test oracle only, n must be in [1, 64]");

    Mollifier phi(q.spec);
    const int d = q.spec.d;
    const Box psup = q.psi.support();

    auto field_product = [&](double a, double b) {
        SmoothField fs = distrib::mollify(q.S, phi, a, n);
        SmoothField ft = distrib::mollify(q.T, phi, b, n);
        Box box = Box::intersect(Box::intersect(fs.support, ft.support), psup);
        if (box.empty()) return quad::QuadResult{0.0, 0.0, 0, true};
        if (d == 1) {
            auto f = [&](double x) { return fs.value1(x) * ft.value1(x) * q.psi.value1(x); };
            return adaptive_1d(f, box.lo[0], box.hi[0], q.rel_tol, q.max_subdivisions);
        }
        std::vector<double> pt(d);
        auto f = [&, pt](const double* x) mutable {
            pt.assign(x, x + d);
            return fs.fn(pt) * ft.fn(pt) * q.psi.value(pt);
        };
        return adaptive_nd(f, box, q.rel_tol, q.max_subdivisions);
    };

    auto legacy_naive_half = [&](const DistributionExpr& Sm, const DistributionExpr& Tr) {
        SmoothField fs = distrib::mollify(Sm, phi, q.beta, n);
        const double eps = npow(n, -q.alpha);
        Box box = Box::intersect(fs.support, psup);
        if (box.empty()) return quad::QuadResult{0.0, 0.0, 0, true};
        auto f = [&](double x) {
            double red_sum = 0.0;
            for (const DeltaTerm& t : Tr.deltas)
                red_sum +=
                    t.coeff * regularize::cauchy_reduce(t.orders[0], eps).value(x - t.point[0]);
            return fs.value1(x) * red_sum * q.psi.value1(x);
        };
        return adaptive_1d(f, box.lo[0], box.hi[0], q.rel_tol, q.max_subdivisions);
    };

    SequenceSample sample;
    sample.n = n;
    sample.rescale_exponent = 0.0;

    switch (q.kind) {
        case ProductKind::Direct: {
            quad::QuadResult r = field_product(q.alpha, q.beta);
            sample.value = require_sample(r, "naive direct");
            sample.quad_error = r.error_estimate;
            break;
        }
        case ProductKind::Exchange: {
            quad::QuadResult r = field_product(q.beta, q.alpha);
            sample.value = require_sample(r, "naive exchange");
            sample.quad_error = r.error_estimate;
            break;
        }
        case ProductKind::Sym: {
            quad::QuadResult r1 = field_product(q.alpha, q.beta);
            quad::QuadResult r2 = field_product(q.beta, q.alpha);
            require_sample(r1, "naive sym");
            require_sample(r2, "naive sym");
            sample.value = 0.5 * (r1.value + r2.value);
            sample.quad_error = 0.5 * (r1.error_estimate + r2.error_estimate);
            break;
        }
        case ProductKind::LegacySym: {
            quad::QuadResult r1 = legacy_naive_half(q.S, q.T);
            quad::QuadResult r2 = legacy_naive_half(q.T, q.S);
            require_sample(r1, "naive legacy");
            require_sample(r2, "naive legacy");
            sample.value = 0.5 * (r1.value + r2.value);
            sample.quad_error = 0.5 * (r1.error_estimate + r2.error_estimate);
            break;
        }
    }
    return sample;
}

SymmetryReport symmetry_check(const ProductQuery& q, long n) {
    q.validate();

    auto eval = [&](const DistributionExpr& A, const DistributionExpr& B, ProductKind kind,
                    double alpha, double beta) {
        ProductQuery qq = q;
        qq.S = A;
        qq.T = B;
        qq.kind = kind;
        qq.alpha = alpha;
        qq.beta = beta;
        return eval_product_at_n(qq, n).value;
    };

    const double d_ab = eval(q.S, q.T, ProductKind::Direct, q.alpha, q.beta);
    const double ex_ba = eval(q.S, q.T, ProductKind::Exchange, q.beta, q.alpha);
    const double td_ba = eval(q.T, q.S, ProductKind::Direct, q.beta, q.alpha);
    const double ex_ab = eval(q.S, q.T, ProductKind::Exchange, q.alpha, q.beta);
    const double tex_ba = eval(q.T, q.S, ProductKind::Exchange, q.beta, q.alpha);

    SymmetryReport rep;
    rep.n = n;
    rep.direct_vs_exchange_swapped = std::abs(d_ab - ex_ba);
    rep.direct_commute = std::abs(d_ab - td_ba);
    rep.exchange_commute = std::abs(ex_ab - tex_ba);
    return rep;
}

ContinuousProductReport continuous_product_check(const DistributionExpr& S,
                                                 const DistributionExpr& T,
                                                 const MollifierSpec& spec, double alpha,
                                                 double beta, const TestFunction& psi) {
    if (!S.deltas.empty() || !T.deltas.empty())
        throw UsageError("continuous_product_check: continuous terms only");

    ProductQuery q;
    q.S = S;
    q.T = T;
    q.spec = spec;
    q.kind = ProductKind::Sym;
    q.alpha = alpha;
    q.beta = beta;
    q.psi = psi;
    q.validate();

    ContinuousProductReport rep;
    rep.n_values = {4, 8, 16, 32};
    for (long n : rep.n_values) rep.samples.push_back(eval_product_at_n(q, n).value);

    // target: int S T Psi over the support overlap
    Box box = psi.support();
    auto eval_expr = [](const DistributionExpr& e, double x) {
        double acc = 0.0;
        for (const ContinuousTerm& t : e.continuous) acc += t.coeff * t.fn({&x, 1});
        return acc;
    };
    Box sbox = S.continuous.front().support;
    Box tbox = T.continuous.front().support;
    for (size_t i = 1; i < S.continuous.size(); ++i) {
        sbox.lo[0] = std::min(sbox.lo[0], S.continuous[i].support.lo[0]);
        sbox.hi[0] = std::max(sbox.hi[0], S.continuous[i].support.hi[0]);
    }
    for (size_t i = 1; i < T.continuous.size(); ++i) {
        tbox.lo[0] = std::min(tbox.lo[0], T.continuous[i].support.lo[0]);
        tbox.hi[0] = std::max(tbox.hi[0], T.continuous[i].support.hi[0]);
    }
    box = Box::intersect(Box::intersect(box, sbox), tbox);
    if (box.empty()) {
        rep.target = 0.0;
    } else {
        auto f = [&](double x) { return eval_expr(S, x) * eval_expr(T, x) * psi.value1(x); };
        quad::QuadResult res = adaptive_1d(f, box.lo[0], box.hi[0], 1e-10, 2000);
        rep.target = require_sample(res, "continuous product target");
    }
    rep.deviation_last = std::abs(rep.samples.back() - rep.target);
    return rep;
}

}  // namespace distprod::products
