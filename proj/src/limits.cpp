#include "distprod/limits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "distprod/detail/parallel.hpp"

namespace distprod::limits {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : 0.0;
}

/// Fit I_n = L + c n^-p on three geometrically spaced samples; falls back to
/// the last sample when the difference ratio is ill conditioned.
void extrapolate_tail(const std::vector<SequenceSample>& tail, LimitVerdict& v) {
    const size_t n = tail.size();
    if (n < 3) {
        v.value = tail.back().value;
        v.extrapolation_error = tail.back().quad_error;
        return;
    }
    const SequenceSample& s2 = tail[n - 1];
    const SequenceSample& s1 = tail[n - 2];
    const SequenceSample& s0 = tail[n - 3];
    const double d1 = s1.value - s0.value;
    const double d2 = s2.value - s1.value;

    double quad_err = 0.0;
    for (size_t i = n >= 3 ? n - 3 : 0; i < n; ++i)
        quad_err = std::max(quad_err, tail[i].quad_error);

    const double q = d1 != 0.0 ? d2 / d1 : 0.0;
    if (!(q > 1e-6) || !(q < 0.95)) {
        v.value = s2.value;
        v.extrapolation_error = std::abs(d2) + quad_err;
        return;
    }
    const double correction = d2 * q / (1.0 - q);
    v.value = s2.value + correction;
    v.extrapolation_error = std::abs(correction) * q + quad_err;
}

}  // namespace

std::vector<long> NGrid::values() const {
    validate();
    std::vector<long> out;
    out.reserve(count);
    long n = n0;
    for (int j = 0; j < count; ++j) {
        out.push_back(n);
        n *= ratio;
    }
    return out;
}

void NGrid::validate() const {
    if (n0 < 1) throw UsageError("n-grid: n0 must be >= 1");
    if (ratio < 2) throw UsageError("n-grid: ratio must be >= 2");
    if (count < 2) throw UsageError("n-grid: at least 2 points required");
    // overflow guard for n0 * ratio^(count-1)
    long double top = static_cast<long double>(n0);
    for (int j = 1; j < count; ++j) top *= ratio;
    if (top > 1e18L) throw UsageError("n-grid: grid exceeds the representable range");
}

const char* to_string(LimitClass c) {
    switch (c) {
        case LimitClass::Convergent: return "Convergent";
        case LimitClass::Zero: return "Zero";
        case LimitClass::Divergent: return "Divergent";
        case LimitClass::Inconclusive: return "Inconclusive";
    }
    return "?";
}

double LimitVerdict::limit_value() const {
    switch (cls) {
        case LimitClass::Convergent: return value;
        case LimitClass::Zero: return 0.0;
        default: return std::numeric_limits<double>::quiet_NaN();
    }
}

LimitVerdict classify_samples(const std::vector<SequenceSample>& samples, const NGrid& grid,
                              const ToleranceSet& tol) {
    (void)grid;
    LimitVerdict v;
    v.samples = samples;

    const int W = tol.window;
    if (static_cast<int>(samples.size()) < W) {
        v.cls = LimitClass::Inconclusive;
        return v;
    }

    std::vector<SequenceSample> tail(samples.end() - W, samples.end());

    std::vector<double> log_n, log_v;
    int sign_changes = 0;
    double prev_sign = 0.0;
    for (const SequenceSample& s : tail) {
        if (std::abs(s.value) < tol.zero_floor) continue;  // exact zero
        log_n.push_back(std::log(static_cast<double>(s.n)));
        log_v.push_back(std::log(std::abs(s.value)));
        const double sign = s.value > 0.0 ? 1.0 : -1.0;
        if (prev_sign != 0.0 && sign != prev_sign) ++sign_changes;
        prev_sign = sign;
    }
    v.sign_changes = sign_changes;

    if (log_n.empty()) {
        // the whole tail vanished below the zero floor
        v.cls = LimitClass::Zero;
        v.decay_exponent = -kInf;
        v.slope = -kInf;
        return v;
    }
    if (log_n.size() < 2) {
        v.cls = LimitClass::Inconclusive;
        return v;
    }

    v.slope = ls_slope(log_n, log_v);

    if (v.slope >= tol.tau_slope) {
        v.cls = LimitClass::Divergent;
        v.growth_exponent = v.slope;
        return v;
    }
    if (v.slope <= -tol.tau_slope) {
        v.cls = LimitClass::Zero;
        v.decay_exponent = v.slope;
        return v;
    }

    // |slope| below threshold: Convergent iff the tail is Cauchy
    const double denom = std::max(std::abs(tail.back().value), 1e-300);
    double max_rel_diff = 0.0;
    for (size_t i = 1; i < tail.size(); ++i)
        max_rel_diff =
            std::max(max_rel_diff, std::abs(tail[i].value - tail[i - 1].value) / denom);
    if (max_rel_diff <= tol.tau_cauchy) {
        v.cls = LimitClass::Convergent;
        extrapolate_tail(tail, v);
        return v;
    }

    v.cls = LimitClass::Inconclusive;
    return v;
}

LimitVerdict estimate_limit(const ProductQuery& q, const NGrid& grid, const ToleranceSet& tol,
                            int workers) {
    q.validate();
    const std::vector<long> ns = grid.values();

    auto one = [&](long n) -> std::optional<SequenceSample> {
        try {
            return products::eval_product_at_n(q, n);
        } catch (const NumericalError&) {
            return std::nullopt;
        }
    };
    std::vector<std::optional<SequenceSample>> raw = detail::parallel_map(ns, one, workers);

    std::vector<SequenceSample> valid;
    for (const auto& s : raw)
        if (s) valid.push_back(*s);

    return classify_samples(valid, grid, tol);
}

PredictionReport verdict_vs_prediction(const LimitVerdict& verdict, const Prediction& predicted) {
    PredictionReport rep;
    char buf[256];
    if (verdict.cls != predicted.cls) {
        std::snprintf(buf, sizeof buf, "class %s, expected %s", to_string(verdict.cls),
                      to_string(predicted.cls));
        rep.detail = buf;
        rep.pass = false;
        return rep;
    }
    if (predicted.cls == LimitClass::Convergent) {
        const double tol = std::max(1e-4 * std::abs(predicted.value), 1e-8);
        const double dev = std::abs(verdict.value - predicted.value);
        std::snprintf(buf, sizeof buf, "value %.10g vs predicted %.10g (|diff| %.3g, tol %.3g)",
                      verdict.value, predicted.value, dev, tol);
        rep.detail = buf;
        rep.pass = dev <= tol;
        return rep;
    }
    std::snprintf(buf, sizeof buf, "class %s as expected", to_string(verdict.cls));
    rep.detail = buf;
    rep.pass = true;
    return rep;
}

}  // namespace distprod::limits
