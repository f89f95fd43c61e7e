#include "distprod/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "distprod/quadrature.hpp"

namespace distprod::constants {

namespace {

constexpr double kRelTol = 1e-11;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

quad::QuadResult moment_1d(const quad::Fn1& f) {
    quad::QuadRequest req;
    req.domain = quad::Box::interval(-1.0, 1.0);
    req.rel_tol = kRelTol;
    req.abs_tol = 1e-15;
    return quad::integrate_1d(req, f);
}

void check_spec(int m) {
    if (m < 2 || m % 2 != 0)
        throw UnsupportedOrder("constants: m must be even and >= 2");
}

ConstantValue compute_uncached(int m, int d, Which which, int p1, int p2) {
    check_spec(m);
    const double e = std::numbers::e;

    switch (which) {
        case Which::Norm1d: {
            quad::QuadResult r =
                moment_1d([&](double x) { return mollifier::unnormalized_deriv(m, 0, x); });
            quad::require(r, "N_m");
            return {r.value, r.error_estimate};
        }
        case Which::NormRadial: {
            if (d < 1) throw UnsupportedOrder("N'_m: dimension must be >= 1");
            quad::QuadResult r = quad::integrate_radial(
                [&](double rr) { return mollifier::unnormalized_deriv(m, 0, rr); }, d, kRelTol,
                1e-15);
            quad::require(r, "N'_m");
            return {r.value, r.error_estimate};
        }
        case Which::A: {
            const int j = p1;
            if (j < 2 || j % 2 != 0 || j > m)
                throw UnsupportedOrder("A_j: requires even j with 2 <= j <= m");
            // Phi(x)/x^j = x^(m-j) exp(1/(x^2-1)) / N_m, the symbolic form of
            // the division (stable at the origin)
            const ConstantValue nm = compute(m, d, Which::Norm1d);
            quad::QuadResult r = moment_1d(
                [&](double x) { return mollifier::unnormalized_deriv(m - j, 0, x); });
            quad::require(r, "A_j");
            const double val = r.value / nm.value;
            return {val, std::abs(val) * (r.error_estimate / std::abs(r.value) +
                                          nm.error / nm.value)};
        }
        case Which::B:
        case Which::K:
        case Which::Bt: {
            const int k = which == Which::Bt ? 1 : 0;
            const int pw = which == Which::B ? m : m - 1;
            const double pref = which == Which::B ? 1.0 : static_cast<double>(m);
            mollifier::Mollifier phi({m, mollifier::Kind::OneD, 1});
            quad::QuadResult r = moment_1d(
                [&](double x) { return std::pow(x, pw) * phi.deriv1d(k, x); });
            quad::require(r, "B/K/Bt");
            const double scale = pref / (e * phi.norm());
            return {scale * r.value, std::abs(scale) * r.error_estimate};
        }
        case Which::G: {
            const int k = p1, l = p2;
            if (k < 0 || l < 0 || k + l >= m)
                throw UnsupportedOrder("G(k,l,m): requires k, l >= 0 and k + l < m");
            if (k > mollifier::kMaxDerivOrder)
                throw UnsupportedOrder("G(k,l,m): k must be <= 8");
            mollifier::Mollifier phi({m, mollifier::Kind::OneD, 1});
            quad::QuadResult r = moment_1d(
                [&](double u) { return std::pow(u, m - l) * phi.deriv1d(k, u); });
            quad::require(r, "G(k,l,m)");
            const double scale = factorial(m) / (factorial(m - l) * e * phi.norm());
            return {scale * r.value, std::abs(scale) * r.error_estimate};
        }
        case Which::BPowD: {
            if (d < 1) throw UnsupportedOrder("B_m^d: dimension must be >= 1");
            const ConstantValue b = compute(m, 1, Which::B);
            const double val = std::pow(b.value, d);
            return {val, std::abs(d * std::pow(b.value, d - 1)) * b.error};
        }
        case Which::Cm:
        case Which::CmLinear: {
            if (d < 1) throw UnsupportedOrder("C_m: dimension must be >= 1");
            const int pw = which == Which::Cm ? m : 1;
            mollifier::Mollifier phi({m, mollifier::Kind::RadialND, d});
            quad::QuadResult r = quad::integrate_radial(
                [&](double rr) { return std::pow(rr, pw) * phi.radial_profile(rr); }, d,
                kRelTol, 1e-15);
            quad::require(r, "C_m");
            const double scale = 1.0 / (e * phi.norm());
            return {scale * r.value, scale * r.error_estimate};
        }
    }
    throw UsageError("constants: unknown id");
}

}  // namespace

ConstantValue compute(int m, int d, Which which, int p1, int p2) {
    using Key = std::tuple<int, int, Which, int, int>;
    static std::mutex mutex;
    static std::map<Key, ConstantValue> cache;
    const Key key{m, d, which, p1, p2};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ConstantValue v = compute_uncached(m, d, which, p1, p2);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, v);
    return v;
}

std::map<std::string, ConstantValue> table(int m, int d) {
    check_spec(m);
    std::map<std::string, ConstantValue> out;
    out["N_m"] = compute(m, d, Which::Norm1d);
    out["Nrad_m"] = compute(m, d, Which::NormRadial);
    for (int j = 2; j <= m; j += 2)
        out["A_" + std::to_string(j)] = compute(m, d, Which::A, j);
    out["B_m"] = compute(m, d, Which::B);
    out["K_m"] = compute(m, d, Which::K);
    out["Bt_m"] = compute(m, d, Which::Bt);
    out["B_m^d"] = compute(m, d, Which::BPowD);
    out["C_m"] = compute(m, d, Which::Cm);
    out["C_m_linear"] = compute(m, d, Which::CmLinear);
    return out;
}

std::vector<IdentityCheck> identity_suite(int m, double tol) {
    check_spec(m);
    const double e = std::numbers::e;
    std::vector<IdentityCheck> checks;

    auto rel_residual = [](double lhs, double rhs) {
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        return std::abs(lhs - rhs) / scale;
    };
    auto push = [&](std::string name, double lhs, double rhs, double residual, bool pass) {
        checks.push_back({std::move(name), lhs, rhs, residual, pass});
    };

    const double nm = compute(m, 1, Which::Norm1d).value;

    for (int j = 2; j <= m; j += 2) {
        const double lhs = compute(m, 1, Which::A, j).value;
        const double rhs = compute(m - j, 1, Which::Norm1d).value / nm;
        const double res = rel_residual(lhs, rhs);
        push("A_" + std::to_string(j) + " = N_{m-j}/N_m", lhs, rhs, res, res <= tol);
    }

    {
        const double lhs = compute(m, 1, Which::B).value;
        const double rhs = compute(2 * m, 1, Which::Norm1d).value / (e * nm * nm);
        const double res = rel_residual(lhs, rhs);
        push("B_m = N_{2m}/(e N_m^2)", lhs, rhs, res, res <= tol);
    }
    {
        const double lhs = compute(m, 1, Which::Bt).value;
        const double rhs =
            -m * (m - 1.0) * compute(2 * m - 2, 1, Which::Norm1d).value / (e * nm * nm);
        const double res = rel_residual(lhs, rhs);
        push("Bt_m = -m(m-1) N_{2m-2}/(e N_m^2)", lhs, rhs, res, res <= tol);
    }

    // G instances reduce to the named constants
    {
        const double lhs = compute(m, 1, Which::G, 0, 0).value;
        const double rhs = compute(m, 1, Which::B).value;
        const double res = rel_residual(lhs, rhs);
        push("G(0,0,m) = B_m", lhs, rhs, res, res <= tol);
    }
    {
        const double lhs = compute(m, 1, Which::G, 1, 1).value;
        const double rhs = compute(m, 1, Which::Bt).value;
        const double res = rel_residual(lhs, rhs);
        push("G(1,1,m) = Bt_m", lhs, rhs, res, res <= tol);
    }

    // parity: G vanishes for odd k + l
    for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
            if ((k + l) % 2 == 0 || k + l >= m) continue;
            const double g = compute(m, 1, Which::G, k, l).value;
            push("G(" + std::to_string(k) + "," + std::to_string(l) + ",m) = 0 (parity)", g,
                 0.0, std::abs(g), std::abs(g) <= tol);
        }
    }

    for (int d : {2, 3}) {
        const double c = compute(m, d, Which::Cm).value;
        push("C_m > 0 (d=" + std::to_string(d) + ")", c, 0.0, c > 0.0 ? 0.0 : 1.0, c > 0.0);
    }

    return checks;
}

}  // namespace distprod::constants
