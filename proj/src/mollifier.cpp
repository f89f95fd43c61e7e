#include "distprod/mollifier.hpp"

#include <cmath>
#include <array>
#include <map>
#include <mutex>

#include "distprod/quadrature.hpp"

namespace distprod::mollifier {

namespace {

// exp(1/(x^2-1)) underflows in binary64 once 1-x^2 drops below ~1.41e-3;
// returning exact 0 there also keeps the rational prefactor finite (k <= 8
// bounds its growth inside the band).
constexpr double kEdgeGuard = 1.4e-3;

using Poly = std::vector<double>;

Poly poly_deriv(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<double>(i);
    return out;
}

// multiply by (x^2 - 1)
Poly poly_mul_x2m1(const Poly& p) {
    Poly out(p.size() + 2, 0.0);
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 2] += p[i];
        out[i] -= p[i];
    }
    return out;
}

// add c * x * p
void poly_add_x_scaled(Poly& dst, const Poly& p, double c) {
    if (dst.size() < p.size() + 1) dst.resize(p.size() + 1, 0.0);
    for (size_t i = 0; i < p.size(); ++i) dst[i + 1] += c * p[i];
}

RationalPrefactor build_prefactor(int m, int k) {
    Poly p(m + 1, 0.0);
    p[m] = 1.0;
    for (int j = 0; j < k; ++j) {
        // P_{j+1} = (x^2-1) [ (x^2-1) P' - 4 j x P ] - 2 x P
        Poly inner = poly_mul_x2m1(poly_deriv(p));
        poly_add_x_scaled(inner, p, -4.0 * j);
        Poly next = poly_mul_x2m1(inner);
        poly_add_x_scaled(next, p, -2.0);
        p = std::move(next);
    }
    return RationalPrefactor{k, std::move(p)};
}

struct NormKey {
    Kind kind;
    int m;
    int d;
    auto operator<=>(const NormKey&) const = default;
};

double compute_norm(const MollifierSpec& spec) {
    if (spec.kind == Kind::RadialND) {
        quad::QuadResult res = quad::integrate_radial(
            [&](double r) { return unnormalized_deriv(spec.m, 0, r); }, spec.d, 1e-12, 1e-16);
        return quad::require(res, "mollifier normalization (radial)");
    }
    quad::QuadRequest req;
    req.domain = quad::Box::interval(-1.0, 1.0);
    req.rel_tol = 1e-12;
    req.abs_tol = 1e-16;
    quad::QuadResult res =
        quad::integrate_1d(req, [&](double x) { return unnormalized_deriv(spec.m, 0, x); });
    return quad::require(res, "mollifier normalization");
}

double cached_norm(const MollifierSpec& spec) {
    static std::mutex mutex;
    static std::map<NormKey, double> cache;
    const NormKey key{spec.kind, spec.m, spec.d};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_norm(spec)).first;
    return it->second;
}

}  // namespace

void MollifierSpec::validate() const {
    if (m < 2 || m % 2 != 0)
        throw UsageError("mollifier order m must be even and >= 2");
    if (kind == Kind::OneD) {
        if (d != 1) throw UsageError("OneD mollifier requires d = 1");
    } else {
        if (d < 1) throw UsageError("mollifier dimension must be >= 1");
    }
}

double RationalPrefactor::eval_poly(double x) const {
    double acc = 0.0;
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

const RationalPrefactor& prefactor(int m, int k) {
    constexpr int kTableM = 32;
    if (k < 0 || k > kMaxDerivOrder)
        throw UnsupportedOrder("prefactor: derivative order must be in [0, 8]");
    if (m >= 2 && m <= kTableM) {
        // hot path: once-initialized fixed table, no lock after first use
        static std::array<std::array<std::once_flag, kMaxDerivOrder + 1>, kTableM / 2 + 1> flags;
        static std::array<std::array<RationalPrefactor, kMaxDerivOrder + 1>, kTableM / 2 + 1>
            table;
        RationalPrefactor& slot = table[m / 2][k];
        std::call_once(flags[m / 2][k], [&] { slot = build_prefactor(m, k); });
        return slot;
    }
    static std::mutex mutex;
    static std::map<std::pair<int, int>, RationalPrefactor> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({m, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(m, k), build_prefactor(m, k)).first;
    return it->second;
}

double unnormalized_deriv(int m, int k, double x) {
    const double t = (1.0 - x) * (1.0 + x);
    if (t <= kEdgeGuard) return 0.0;
    const RationalPrefactor& pf = prefactor(m, k);
    // P(x) / (x^2-1)^(2k) * exp(1/(x^2-1)) computed through one exponential
    // so neither factor over- or underflows on its own.
    return pf.eval_poly(x) * std::exp(-1.0 / t - 2.0 * k * std::log(t));
}

Mollifier::Mollifier(MollifierSpec spec) : spec_(spec) {
    spec_.validate();
    norm_ = cached_norm(spec_);  // memoized across instances of the same spec
}

double Mollifier::norm() const { return norm_; }

double Mollifier::value(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != spec_.d)
        throw UsageError("Mollifier::value: point dimension mismatch");
    switch (spec_.kind) {
        case Kind::OneD:
            return deriv1d(0, x[0]);
        case Kind::ProductND: {
            double prod = 1.0;
            for (double xi : x) {
                prod *= deriv1d(0, xi);
                if (prod == 0.0) return 0.0;
            }
            return prod;
        }
        case Kind::RadialND: {
            double sq = 0.0;
            for (double xi : x) sq += xi * xi;
            return radial_profile(std::sqrt(sq));
        }
    }
    return 0.0;
}

double Mollifier::deriv1d(int k, double x) const {
    if (k < 0 || k > kMaxDerivOrder)
        throw UnsupportedOrder("derivative order must be in [0, 8]");
    if (spec_.kind == Kind::RadialND && k > 0)
        throw UnsupportedOrder("radial mollifier supports k = 0 only");
    return unnormalized_deriv(spec_.m, k, x) / norm();
}

double Mollifier::radial_profile(double r) const {
    return unnormalized_deriv(spec_.m, 0, r) / norm();
}

double Mollifier::delta_seq(double alpha, long n, std::span<const double> x) const {
    if (n < 1) throw UsageError("delta_seq: n must be >= 1");
    if (!(alpha > 0.0)) throw UsageError("delta_seq: alpha must be positive");
    const double s = std::pow(static_cast<double>(n), alpha);
    std::vector<double> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = s * x[i];
    return std::pow(static_cast<double>(n), spec_.d * alpha) * value(y);
}

}  // namespace distprod::mollifier
