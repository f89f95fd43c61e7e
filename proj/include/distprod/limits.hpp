#pragma once

#include <string>
#include <vector>

#include "distprod/products.hpp"

namespace distprod::limits {

using products::ProductQuery;
using products::SequenceSample;

/// Geometric grid n_j = n0 * ratio^j, j = 0..count-1.
struct NGrid {
    long n0 = 2;
    long ratio = 2;
    int count = 15;  // up to 2^15 with the defaults

    std::vector<long> values() const;
    void validate() const;
};

struct ToleranceSet {
    double tau_slope = 0.1;    // |slope| at or above this is growth/decay
    double tau_cauchy = 1e-4;  // relative tail difference bound for Convergent
    int window = 5;            // tail points used for slope and Cauchy checks
    double zero_floor = 1e-13; // |sample| below this is an exact zero
};

enum class LimitClass { Convergent, Zero, Divergent, Inconclusive };

const char* to_string(LimitClass c);

struct LimitVerdict {
    LimitClass cls = LimitClass::Inconclusive;
    double value = 0.0;                // Convergent: extrapolated limit
    double extrapolation_error = 0.0;  // Convergent only
    double decay_exponent = 0.0;       // Zero: fitted slope (-inf if exact zeros)
    double growth_exponent = 0.0;      // Divergent: fitted slope
    double slope = 0.0;                // fitted d log|I| / d log n over the tail
    int sign_changes = 0;              // sign flips among nonzero tail samples
    std::vector<SequenceSample> samples;

    /// The limit the verdict asserts: `value` for Convergent, 0 for Zero.
    double limit_value() const;
};

/// Classifies an already evaluated sequence (log-log slope over the tail
/// window, Cauchy tail test, power-law extrapolation of the limit).
LimitVerdict classify_samples(const std::vector<SequenceSample>& samples,
                              const NGrid& grid, const ToleranceSet& tol);

/// Evaluates the product sequence on the grid and classifies it.
/// Individual sample failures are tolerated down to `tol.window` valid
/// samples; fewer than that yields Inconclusive.
LimitVerdict estimate_limit(const ProductQuery& q, const NGrid& grid,
                            const ToleranceSet& tol = {}, int workers = 1);

struct Prediction {
    LimitClass cls = LimitClass::Convergent;
    double value = 0.0;
};

struct PredictionReport {
    bool pass = false;
    std::string detail;
};

/// Pass iff the class matches and, for Convergent, the value agrees with
/// the predicted constant to max(1e-4 |predicted|, 1e-8).
PredictionReport verdict_vs_prediction(const LimitVerdict& verdict, const Prediction& predicted);

}  // namespace distprod::limits
