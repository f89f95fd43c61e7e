#include "distprod/scanner.hpp"

#include <algorithm>
#include <cmath>

#include "distprod/constants.hpp"
#include "distprod/detail/parallel.hpp"

namespace distprod::scanner {

namespace {

constants::ConstantValue constant_by_id(const std::string& id, int k, int l, int m, int d) {
    if (id == "B_m") return constants::compute(m, d, constants::Which::B);
    if (id == "K_m") return constants::compute(m, d, constants::Which::K);
    if (id == "Bt_m") return constants::compute(m, d, constants::Which::Bt);
    if (id == "B_m^d") return constants::compute(m, d, constants::Which::BPowD);
    if (id == "C_m") return constants::compute(m, d, constants::Which::Cm);
    return constants::compute(m, d, constants::Which::G, k, l);
}

}  // namespace

CriticalPrediction predict_critical(int k, int l, int m, int d, mollifier::Kind kind) {
    if (m < 2 || m % 2 != 0) throw UsageError("predict_critical: m must be even and >= 2");
    if (k < 0 || l < 0) throw UsageError("predict_critical: orders must be >= 0");

    CriticalPrediction out;
    switch (kind) {
        case mollifier::Kind::OneD: {
            if (m <= k + l) throw UnsupportedOrder("predict_critical: requires m > k + l");
            out.ratio = static_cast<double>(m + 1) / (m - k - l);
            if (k == 0 && l == 0)
                out.constant_id = "B_m";
            else if (k + l == 1)
                out.constant_id = "K_m";
            else if (k == 1 && l == 1)
                out.constant_id = "Bt_m";
            else
                out.constant_id = "G(k,l,m)";
            return out;
        }
        case mollifier::Kind::ProductND: {
            if (k != 0 || l != 0)
                throw UnsupportedOrder("predict_critical: product mollifier handles k = l = 0");
            out.ratio = static_cast<double>(m + 1) / m;
            out.constant_id = "B_m^d";
            return out;
        }
        case mollifier::Kind::RadialND: {
            if (k != 0 || l != 0)
                throw UnsupportedOrder("predict_critical: radial mollifier handles k = l = 0");
            (void)d;
            out.ratio = static_cast<double>(m + d) / m;
            out.constant_id = "C_m";
            return out;
        }
    }
    throw UsageError("predict_critical: unknown mollifier kind");
}

bool ScanReport::ordering_ok() const {
    // Divergent (rank 0) -> Convergent (1) -> Zero (2); Inconclusive points
    // are transition padding and carry no rank.
    int prev = -1;
    for (const ScanPoint& p : points) {
        int rank;
        switch (p.cls) {
            case LimitClass::Divergent: rank = 0; break;
            case LimitClass::Convergent: rank = 1; break;
            case LimitClass::Zero: rank = 2; break;
            default: continue;
        }
        if (rank < prev) return false;
        prev = rank;
    }
    return true;
}

ScanReport scan(const ScanRequest& req) {
    if (!(req.ratio_lo > 0.0) || !(req.ratio_hi > req.ratio_lo) || !(req.step > 0.0))
        throw UsageError("scan: requires 0 < ratio_lo < ratio_hi and step > 0");

    ScanReport report;

    // closed-form prediction, available when S and T are single delta terms
    bool have_prediction = false;
    if (req.query.S.deltas.size() == 1 && req.query.S.continuous.empty() &&
        req.query.T.deltas.size() == 1 && req.query.T.continuous.empty()) {
        const int k = req.query.S.deltas[0].total_order();
        const int l = req.query.T.deltas[0].total_order();
        const int m = req.query.spec.m;
        const int d = req.query.spec.d;
        try {
            CriticalPrediction pred = predict_critical(k, l, m, d, req.query.spec.kind);
            report.predicted_ratio = pred.ratio;
            report.predicted_constant_id = pred.constant_id;
            report.predicted_constant = constant_by_id(pred.constant_id, k, l, m, d).value;
            have_prediction = true;
        } catch (const UnsupportedOrder&) {
            // no closed form for this combination; scan without a prediction
        }
    }

    std::vector<double> ratios;
    for (double r = req.ratio_lo; r <= req.ratio_hi + 1e-12; r += req.step) ratios.push_back(r);
    if (req.include_predicted && have_prediction && report.predicted_ratio >= req.ratio_lo &&
        report.predicted_ratio <= req.ratio_hi) {
        ratios.push_back(report.predicted_ratio);
        std::sort(ratios.begin(), ratios.end());
        // collapse near-duplicates onto the exact predicted ratio
        std::vector<double> dedup;
        for (double r : ratios) {
            if (!dedup.empty() && std::abs(r - dedup.back()) < 1e-9) {
                if (std::abs(r - report.predicted_ratio) <
                    std::abs(dedup.back() - report.predicted_ratio))
                    dedup.back() = r;
                continue;
            }
            dedup.push_back(r);
        }
        ratios = std::move(dedup);
    }

    auto eval_point = [&](double r) {
        ScanPoint p;
        p.ratio = r;
        try {
            ProductQuery q = req.query;
            q.beta = 1.0;
            q.alpha = r;
            LimitVerdict v = limits::estimate_limit(q, req.grid, req.tol, 1);
            p.cls = v.cls;
            p.slope = v.slope;
            p.value = v.cls == LimitClass::Convergent ? v.value : 0.0;
        } catch (const NumericalError&) {
            p.cls = LimitClass::Inconclusive;
        }
        return p;
    };
    report.points = detail::parallel_map(ratios, eval_point, req.workers);

    // A critical sits between a Divergent point and a {Zero, Convergent}
    // point. Grid points whose pure power-law slope lands exactly on the
    // tau_slope threshold come out Inconclusive; they form the transition
    // band, so detection pairs the nearest classified points across them.
    {
        const ScanPoint* prev = nullptr;
        for (const ScanPoint& p : report.points) {
            const bool div = p.cls == LimitClass::Divergent;
            const bool lim = p.cls == LimitClass::Zero || p.cls == LimitClass::Convergent;
            if (!div && !lim) continue;
            if (prev) {
                const bool prev_div = prev->cls == LimitClass::Divergent;
                if (prev_div != div)
                    report.detected_critical.push_back(0.5 * (prev->ratio + p.ratio));
            }
            prev = &p;
        }
    }

    if (have_prediction) {
        for (const ScanPoint& p : report.points)
            if (p.ratio == report.predicted_ratio) report.at_predicted = p;
    }
    return report;
}

}  // namespace distprod::scanner
