#include "distprod/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace distprod::quad {

namespace {

constexpr int kHighN = 16;  // Clenshaw-Curtis 16 (17 nodes)
constexpr int kLowN = 8;    // embedded CC 8 on the even-index nodes

struct CCPair {
    std::array<double, kHighN + 1> nodes{};   // cos(j pi / 16), j = 0..16
    std::array<double, kHighN + 1> w_high{};
    std::array<double, kLowN + 1> w_low{};
};

// w_j = (2/N) mu_j sum_{k even} gamma_k cos(k j pi / N), with
// gamma_k = c_k / 2 at k in {0, N} and c_k = 2/(1-k^2); exactness on
// polynomials up to degree N is checked in the unit tests.
template <int N>
void cc_weights(std::array<double, N + 1>& w) {
    for (int j = 0; j <= N; ++j) {
        double mu = (j == 0 || j == N) ? 0.5 : 1.0;
        double sum = 0.0;
        for (int k = 0; k <= N; k += 2) {
            double gamma = 2.0 / (1.0 - static_cast<double>(k) * k);
            if (k == 0 || k == N) gamma *= 0.5;
            sum += gamma * std::cos(k * j * std::numbers::pi / N);
        }
        w[j] = 2.0 / N * mu * sum;
    }
}

const CCPair& cc_pair() {
    static const CCPair pair = [] {
        CCPair p;
        for (int j = 0; j <= kHighN; ++j)
            p.nodes[j] = std::cos(j * std::numbers::pi / kHighN);
        cc_weights<kHighN>(p.w_high);
        cc_weights<kLowN>(p.w_low);
        return p;
    }();
    return pair;
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double err = 0.0;
    double resabs = 0.0;
    bool refinable = true;
};

Panel evaluate_panel(const Fn1& f, double a, double b) {
    const CCPair& cc = cc_pair();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    std::array<double, kHighN + 1> fv{};
    for (int j = 0; j <= kHighN; ++j) fv[j] = f(mid + half * cc.nodes[j]);

    double high = 0.0, low = 0.0, resabs = 0.0;
    for (int j = 0; j <= kHighN; ++j) {
        high += cc.w_high[j] * fv[j];
        resabs += cc.w_high[j] * std::abs(fv[j]);
    }
    for (int i = 0; i <= kLowN; ++i) low += cc.w_low[i] * fv[2 * i];

    const double mean = 0.5 * high;  // average of f in the [-1,1] frame
    double resasc = 0.0;
    for (int j = 0; j <= kHighN; ++j)
        resasc += cc.w_high[j] * std::abs(fv[j] - mean);

    Panel p;
    p.a = a;
    p.b = b;
    p.value = high * half;
    p.resabs = resabs * half;
    resasc *= half;

    // QUADPACK-style inflation of the raw high/low difference keeps the
    // estimate conservative on smooth integrands.
    double err = std::abs(high - low) * half;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round = 50.0 * std::numeric_limits<double>::epsilon() * p.resabs;
    p.err = std::max(err, round);
    return p;
}

// Canonical initial boundaries on [-1,1]: 0 and +-(1 - 2^-j). Integrands in
// this project are flat with an essential singularity at the support edge,
// so panels must cluster there from the start.
std::vector<double> initial_boundaries(double a, double b) {
    std::vector<double> canonical{0.0};
    for (int j = 1; j <= 6; ++j) {
        const double t = 1.0 - std::ldexp(1.0, -j);
        canonical.push_back(t);
        canonical.push_back(-t);
    }
    std::sort(canonical.begin(), canonical.end());

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<double> pts{a};
    for (double c : canonical) pts.push_back(mid + half * c);
    pts.push_back(b);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

struct QueueEntry {
    double err;
    double a;
    size_t idx;
};

struct QueueLess {
    bool operator()(const QueueEntry& x, const QueueEntry& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;  // ties: leftmost panel first
    }
};

}  // namespace

bool Box::empty() const {
    for (int i = 0; i < dim(); ++i)
        if (!(lo[i] < hi[i])) return true;
    return false;
}

Box Box::intersect(const Box& a, const Box& b) {
    Box out;
    const int d = a.dim();
    out.lo.resize(d);
    out.hi.resize(d);
    for (int i = 0; i < d; ++i) {
        out.lo[i] = std::max(a.lo[i], b.lo[i]);
        out.hi[i] = std::min(a.hi[i], b.hi[i]);
    }
    return out;
}

QuadResult integrate_1d(const QuadRequest& req, const Fn1& f) {
    if (req.domain.dim() != 1) throw UsageError("integrate_1d: domain must be 1-D");
    const double a = req.domain.lo[0], b = req.domain.hi[0];
    if (!(a < b)) throw UsageError("integrate_1d: requires a < b");
    if (!(req.rel_tol > 0.0) || !(req.abs_tol > 0.0))
        throw UsageError("integrate_1d: tolerances must be positive");

    std::vector<Panel> panels;
    const std::vector<double> pts = initial_boundaries(a, b);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        panels.push_back(evaluate_panel(f, pts[i], pts[i + 1]));

    double total_val = 0.0, total_err = 0.0, total_abs = 0.0;
    for (const Panel& p : panels) {
        total_val += p.value;
        total_err += p.err;
        total_abs += p.resabs;
    }

    QuadResult res;
    if (total_abs == 0.0) {  // identically zero on the domain
        res.value = 0.0;
        res.error_estimate = 0.0;
        res.converged = true;
        return res;
    }

    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLess> queue;
    for (size_t i = 0; i < panels.size(); ++i)
        queue.push({panels[i].err, panels[i].a, i});

    const double width_floor =
        16.0 * std::numeric_limits<double>::epsilon() * std::max({std::abs(a), std::abs(b), 1.0});
    int splits = 0;

    auto threshold = [&] { return std::max(req.abs_tol, req.rel_tol * std::abs(total_val)); };

    while (total_err > threshold() && splits < req.max_subdivisions && !queue.empty()) {
        const QueueEntry top = queue.top();
        queue.pop();
        Panel& parent = panels[top.idx];
        if (parent.err != top.err) continue;  // stale entry
        if (!parent.refinable || parent.b - parent.a <= width_floor) {
            parent.refinable = false;
            continue;
        }

        const double m = 0.5 * (parent.a + parent.b);
        Panel left = evaluate_panel(f, parent.a, m);
        Panel right = evaluate_panel(f, m, parent.b);
        ++splits;

        total_val += left.value + right.value - parent.value;
        total_err += left.err + right.err - parent.err;

        parent = left;
        panels.push_back(right);
        queue.push({left.err, left.a, top.idx});
        queue.push({right.err, right.a, panels.size() - 1});
    }

    // Deterministic final summation in interval order.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, err = 0.0;
    for (const Panel& p : panels) {
        value += p.value;
        err += p.err;
    }

    res.value = value;
    res.error_estimate = err;
    res.subdivisions_used = splits;
    res.converged = err <= std::max(req.abs_tol, req.rel_tol * std::abs(value));
    return res;
}

QuadResult integrate_nd(const QuadRequest& req, const FnN& f) {
    const int d = req.domain.dim();
    if (d < 2 || d > 3) throw UsageError("integrate_nd: dimension must be 2 or 3");

    QuadRequest inner_req;
    inner_req.domain.lo.assign(req.domain.lo.begin() + 1, req.domain.lo.end());
    inner_req.domain.hi.assign(req.domain.hi.begin() + 1, req.domain.hi.end());
    inner_req.rel_tol = 0.25 * req.rel_tol;
    inner_req.abs_tol = 0.25 * req.abs_tol;
    inner_req.max_subdivisions = req.max_subdivisions;

    double max_inner_err = 0.0;
    bool inner_ok = true;

    QuadRequest outer_req;
    outer_req.domain = Box::interval(req.domain.lo[0], req.domain.hi[0]);
    outer_req.rel_tol = req.rel_tol;
    outer_req.abs_tol = req.abs_tol;
    outer_req.max_subdivisions = req.max_subdivisions;

    Fn1 outer = [&](double x0) {
        QuadResult inner;
        if (d == 2) {
            inner = integrate_1d(inner_req, [&](double x1) {
                const double pt[2] = {x0, x1};
                return f(pt);
            });
        } else {
            inner = integrate_nd(inner_req, [&](const double* rest) {
                const double pt[3] = {x0, rest[0], rest[1]};
                return f(pt);
            });
        }
        max_inner_err = std::max(max_inner_err, inner.error_estimate);
        inner_ok = inner_ok && inner.converged;
        return inner.value;
    };

    QuadResult res = integrate_1d(outer_req, outer);
    res.error_estimate += (req.domain.hi[0] - req.domain.lo[0]) * max_inner_err;
    res.converged = res.converged && inner_ok;
    return res;
}

double sphere_area(int d) {
    if (d < 1) throw UsageError("sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

QuadResult integrate_radial(const Fn1& radial_profile, int d, double rel_tol, double abs_tol,
                            int max_subdivisions) {
    QuadRequest req;
    req.domain = Box::interval(0.0, 1.0);
    req.rel_tol = rel_tol;
    req.abs_tol = abs_tol;
    req.max_subdivisions = max_subdivisions;
    const double area = sphere_area(d);
    QuadResult res = integrate_1d(
        req, [&](double r) { return std::pow(r, d - 1) * radial_profile(r); });
    res.value *= area;
    res.error_estimate *= area;
    return res;
}

double require(const QuadResult& res, const char* what) {
    if (!res.converged)
        throw NumericalError(std::string(what) + ": quadrature did not converge", res.value,
                             res.error_estimate);
    return res.value;
}

}  // namespace distprod::quad
