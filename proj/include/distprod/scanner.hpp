#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distprod/limits.hpp"

namespace distprod::scanner {

using limits::LimitClass;
using limits::LimitVerdict;
using limits::NGrid;
using limits::ToleranceSet;
using products::ProductQuery;

/// Closed-form critical ratio alpha/beta and the name of the limit
/// constant, for delta^(k) x delta^(l) products:
///   1-D and product mollifier:  (m+1)/(m-k-l)
///   radial mollifier (k=l=0):   (m+d)/m
struct CriticalPrediction {
    double ratio = 0.0;
    std::string constant_id;  // B_m, K_m, Bt_m, G(k,l,m), B_m^d, C_m
};

CriticalPrediction predict_critical(int k, int l, int m, int d, mollifier::Kind kind);

struct ScanPoint {
    double ratio = 0.0;
    LimitClass cls = LimitClass::Inconclusive;
    double value = 0.0;  // verdict limit value (0 unless Convergent)
    double slope = 0.0;
};

struct ScanReport {
    std::vector<ScanPoint> points;            // ascending ratio
    std::vector<double> detected_critical;    // midpoints of Divergent -> {Zero, Convergent} edges
    double predicted_ratio = 0.0;
    std::string predicted_constant_id;
    double predicted_constant = 0.0;          // oracle value (with Psi(0) folded in by the caller)
    std::optional<ScanPoint> at_predicted;    // measurement at the exact predicted ratio

    /// True when the non-Inconclusive classes along increasing ratio are
    /// Divergent*, Convergent*, Zero* in that order.
    bool ordering_ok() const;
};

struct ScanRequest {
    ProductQuery query;       // alpha is overwritten per point; beta pinned to 1
    double ratio_lo = 1.1;
    double ratio_hi = 2.0;
    double step = 0.05;
    bool include_predicted = true;  // evaluate at the exact closed-form ratio too
    NGrid grid;
    ToleranceSet tol;
    int workers = 1;
};

ScanReport scan(const ScanRequest& req);

}  // namespace distprod::scanner
